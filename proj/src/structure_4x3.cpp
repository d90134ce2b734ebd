#include "ilsconn/structure_4x3.hpp"

#include "ilsconn/elimination.hpp"
#include "ilsconn/errors.hpp"
#include "ilsconn/solution_graph.hpp"

#include <algorithm>
#include <numeric>

namespace ilsconn {

const SignPattern &canonical_4x3_pattern() {
  static const SignPattern pattern = SignPattern::from_signs({
      {1, 1, 0},
      {1, -1, 0},
      {-1, 0, 1},
      {-1, 0, -1},
  });
  return pattern;
}

bool not_eliminable_anywhere(const SignPattern &p) {
  for (std::size_t j = 0; j < p.cols(); ++j)
    if (can_eliminate(p, j)) return false;
  return true;
}

std::optional<CanonicalMatch> match_canonical(const SignPattern &p) {
  if (p.rows() != 4 || p.cols() != 3)
    throw InputError("canonical matching needs a 4x3 sign pattern");
  const SignPattern &target = canonical_4x3_pattern();
  CanonicalMatch m;
  std::iota(m.row_perm.begin(), m.row_perm.end(), 0);
  do {
    std::iota(m.col_perm.begin(), m.col_perm.end(), 0);
    do {
      bool equal = true;
      for (std::size_t i = 0; i < 4 && equal; ++i)
        for (std::size_t j = 0; j < 3 && equal; ++j)
          equal = p(m.row_perm[i], m.col_perm[j]) == target(i, j);
      if (equal) return m;
    } while (std::next_permutation(m.col_perm.begin(), m.col_perm.end()));
  } while (std::next_permutation(m.row_perm.begin(), m.row_perm.end()));
  return std::nullopt;
}

CanonicalPath canonical_path(const CoeffMatrix &a, const RhsVector &b,
                             DomainBound d, const Point &s, const Point &t) {
  if (a.rows() != 4 || a.cols() != 3 ||
      !(sign_pattern(a) == canonical_4x3_pattern()))
    throw InputError("matrix does not have the canonical 4x3 sign pattern");
  if (!is_feasible(a, b, d, s)) throw InputError("start point is infeasible");
  if (!is_feasible(a, b, d, t)) throw InputError("end point is infeasible");

  bool reversed = s[0] < t[0];
  const Point &from = reversed ? t : s;
  const Point &to = reversed ? s : t;
  CanonicalPath path{{from, Point{from[0], to[1], from[2]},
                      Point{to[0], to[1], from[2]}, to}};
  if (reversed) std::reverse(path.points.begin(), path.points.end());
  for (const auto &x : path.points)
    if (!is_feasible(a, b, d, x))
      throw DefectError("canonical path left the feasible set");
  return path;
}

} // namespace ilsconn
