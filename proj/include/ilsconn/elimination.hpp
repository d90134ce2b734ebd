#pragma once

#include "ilsconn/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ilsconn {

/// A sequence (j_1, ..., j_n) of all columns such that each j_t can be
/// eliminated once j_1 .. j_{t-1} have been removed. Column indices refer to
/// the original matrix.
struct EliminationOrdering {
  std::vector<std::size_t> columns;
  bool operator==(const EliminationOrdering &) const = default;
};

/// Output of the greedy column reduction: the columns removed, in removal
/// order, and the residual columns (ascending) none of which can be
/// eliminated in the reduced matrix.
struct ReductionResult {
  std::vector<std::size_t> eliminated;
  std::vector<std::size_t> residual;
};

/// Column j can be eliminated if every row that is positive at j is zero in
/// all other columns, or every row that is negative at j is. Either condition
/// holds vacuously when no row triggers it, so zero columns are eliminable.
bool can_eliminate(const SignPattern &p, std::size_t j);
inline bool can_eliminate(const CoeffMatrix &a, std::size_t j) {
  return can_eliminate(sign_pattern(a), j);
}

/// elm(A, J): drops the columns in J and keeps the remaining ones in their
/// original order. J may cover every column, giving an m x 0 matrix.
CoeffMatrix eliminate(const CoeffMatrix &a, std::span<const std::size_t> cols);
SignPattern eliminate(const SignPattern &p, std::span<const std::size_t> cols);

/// Repeatedly removes the smallest-index eliminable column of the residual
/// matrix until none is left.
ReductionResult greedy_reduce(const SignPattern &p);
inline ReductionResult greedy_reduce(const CoeffMatrix &a) {
  return greedy_reduce(sign_pattern(a));
}

/// The greedy order if it removes every column. Greedy choice is complete
/// here because eliminability only gets easier as columns disappear; the
/// exhaustive oracle below is the independent check of that claim.
std::optional<EliminationOrdering>
find_elimination_ordering(const SignPattern &p);
inline std::optional<EliminationOrdering>
find_elimination_ordering(const CoeffMatrix &a) {
  return find_elimination_ordering(sign_pattern(a));
}

/// Literal check of the definition: builds each eliminated matrix
/// elm(A, {j_1..j_{t-1}}) and tests column j_t in it.
bool is_elimination_ordering(const SignPattern &p,
                             std::span<const std::size_t> order);

inline constexpr std::size_t kOracleMaxColumns = 8;

/// Tries all n! column orders. Throws CapabilityError for n > 8.
std::optional<EliminationOrdering>
exhaustive_ordering_oracle(const SignPattern &p);
inline std::optional<EliminationOrdering>
exhaustive_ordering_oracle(const CoeffMatrix &a) {
  return exhaustive_ordering_oracle(sign_pattern(a));
}

} // namespace ilsconn
