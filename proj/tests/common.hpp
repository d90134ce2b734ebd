#pragma once

#include "ilsconn/harness.hpp"
#include "ilsconn/matrix.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

using ilsconn::CoeffMatrix;
using ilsconn::Rational;
using ilsconn::RhsVector;

inline CoeffMatrix M(std::initializer_list<std::initializer_list<long long>> rows) {
  return CoeffMatrix::from_integers(rows);
}

/// Matrix from textual entries such as "3/2" or "-4".
inline CoeffMatrix Q(std::initializer_list<std::initializer_list<const char *>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) {
    out.emplace_back();
    for (auto e : r) out.back().push_back(ilsconn::parse_rational(e));
  }
  return CoeffMatrix::from_rows(out);
}

inline RhsVector B(std::initializer_list<long long> v) {
  RhsVector out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline CoeffMatrix random_int_matrix(ilsconn::harness::Rng &rng, std::size_t m,
                                     std::size_t n, int lo, int hi) {
  return ilsconn::harness::random_matrix(rng, m, n, lo, hi).to_coeff();
}

} // namespace testing
