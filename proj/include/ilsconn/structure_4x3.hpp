#pragma once

#include "ilsconn/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace ilsconn {

/// The only sign pattern, up to row and column reordering, of a 4x3 matrix
/// that has no forbidden pattern and cannot be eliminated at any column:
///
///   + + 0
///   + - 0
///   - 0 +
///   - 0 -
const SignPattern &canonical_4x3_pattern();

/// permute(P, row_perm, col_perm) equals the canonical pattern.
struct CanonicalMatch {
  std::array<std::size_t, 4> row_perm;
  std::array<std::size_t, 3> col_perm;
  auto operator<=>(const CanonicalMatch &) const = default;
};

/// Walk s -> (s1, t2, s3) -> (t1, t2, s3) -> t; consecutive points may
/// coincide.
struct CanonicalPath {
  std::array<Point, 4> points;
};

bool not_eliminable_anywhere(const SignPattern &p);
inline bool not_eliminable_anywhere(const CoeffMatrix &a) {
  return not_eliminable_anywhere(sign_pattern(a));
}

/// Lexicographically smallest (row_perm, col_perm) among the 144 candidates,
/// or nullopt. Throws InputError unless the pattern is 4x3.
std::optional<CanonicalMatch> match_canonical(const SignPattern &p);
inline std::optional<CanonicalMatch> match_canonical(const CoeffMatrix &a) {
  return match_canonical(sign_pattern(a));
}

/// Path between two feasible points of a matrix whose sign pattern is
/// exactly the canonical one. The walk is built from whichever endpoint has
/// the larger first coordinate and is returned oriented from s to t. Every
/// point is checked for feasibility; a failure throws DefectError. Throws
/// InputError if the pattern differs or s, t are infeasible.
CanonicalPath canonical_path(const CoeffMatrix &a, const RhsVector &b,
                             DomainBound d, const Point &s, const Point &t);

} // namespace ilsconn
