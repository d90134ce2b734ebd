#include "ilsconn/rational.hpp"

#include "ilsconn/errors.hpp"

#include <cctype>

namespace ilsconn {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

cpp_int parse_digits(std::string_view s) {
  cpp_int value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

} // namespace

int sgn(const Rational &r) { return r.sign(); }

Rational sf(const Rational &r) { return Rational(1 + sgn(r), 2); }

Rational abs(const Rational &r) { return r.sign() < 0 ? Rational(-r) : r; }

bool is_integer(const Rational &r) {
  return boost::multiprecision::denominator(r) == 1;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto fail = [&]() -> InputError {
    return InputError("not a rational number: \"" + std::string(text) + "\"");
  };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    cpp_int d = parse_digits(den);
    if (d == 0) throw fail();
    value = Rational(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw fail();
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw fail();
    cpp_int scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    cpp_int num = (whole.empty() ? cpp_int(0) : parse_digits(whole)) * scale +
                  (frac.empty() ? cpp_int(0) : parse_digits(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) throw fail();
    value = Rational(parse_digits(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational &r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

} // namespace ilsconn
