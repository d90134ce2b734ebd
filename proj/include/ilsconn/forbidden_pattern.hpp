#pragma once

#include "ilsconn/matrix.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ilsconn {

/// Ordered rows (i_1..i_k) and columns (j_1..j_k), k >= 2, such that column
/// j_l is nonzero among the chosen rows exactly at i_l and i_{l+1} (cyclic,
/// i_{k+1} = i_1) and the two entries have opposite signs.
struct ForbiddenPattern {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const noexcept { return rows.size(); }
  auto operator<=>(const ForbiddenPattern &) const = default;
};

inline constexpr std::size_t kPatternSearchMaxDim = 12;

/// Checks both defining conditions for the given orderings. Throws
/// InputError for mismatched sizes, duplicates, fewer than two rows or
/// out-of-range indices.
bool verify_pattern(const SignPattern &p, const ForbiddenPattern &fp);
inline bool verify_pattern(const CoeffMatrix &a, const ForbiddenPattern &fp) {
  return verify_pattern(sign_pattern(a), fp);
}

/// A forbidden pattern of minimum size, or nullopt.
///
/// Sizes are tried in increasing order. Each certificate is normalized by
/// rotating the cycle so i_1 is the smallest row and then keeping whichever
/// of the cycle and its reversal has the smaller column order; among the
/// normalized certificates of the minimum size the lexicographically smallest
/// (rows, cols) pair is returned. Throws CapabilityError beyond 12 rows or
/// columns.
std::optional<ForbiddenPattern> find_minimal_pattern(const SignPattern &p);
inline std::optional<ForbiddenPattern>
find_minimal_pattern(const CoeffMatrix &a) {
  return find_minimal_pattern(sign_pattern(a));
}

/// True iff no column outside the pattern has two entries of opposite sign
/// in the pattern's rows.
bool complement_is_clean(const SignPattern &p, const ForbiddenPattern &fp);
inline bool complement_is_clean(const CoeffMatrix &a,
                                const ForbiddenPattern &fp) {
  return complement_is_clean(sign_pattern(a), fp);
}

/// For two-column matrices: the lexicographically smallest row pair whose
/// signs are nonzero and opposite in both columns.
std::optional<std::pair<std::size_t, std::size_t>>
opposite_row_pair(const SignPattern &p);
inline std::optional<std::pair<std::size_t, std::size_t>>
opposite_row_pair(const CoeffMatrix &a) {
  return opposite_row_pair(sign_pattern(a));
}

} // namespace ilsconn
