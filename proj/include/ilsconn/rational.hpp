#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ilsconn {

/// Exact rational number, always kept in reduced form with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// -1, 0 or 1.
int sgn(const Rational &r);

/// (1 + sgn(r)) / 2, i.e. 1 for positive, 1/2 for zero and 0 for negative r.
Rational sf(const Rational &r);

Rational abs(const Rational &r);

/// Accepts "7", "-3/4", "2.5", "-0.125" and "+1". Decimals are converted
/// exactly. Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "7" for integers, "p/q" otherwise.
std::string to_string(const Rational &r);

bool is_integer(const Rational &r);

} // namespace ilsconn
