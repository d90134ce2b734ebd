#include "ilsconn/elimination.hpp"

#include "ilsconn/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ilsconn {

namespace {

// Condition check restricted to the columns flagged in `active`.
bool can_eliminate_among(const SignPattern &p, std::size_t j,
                         const std::vector<bool> &active) {
  auto row_isolated = [&](std::size_t i) {
    for (std::size_t k = 0; k < p.cols(); ++k)
      if (k != j && active[k] && p.sign(i, k) != 0) return false;
    return true;
  };
  bool positive_ok = true;
  bool negative_ok = true;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    int s = p.sign(i, j);
    if (s == 0) continue;
    bool isolated = row_isolated(i);
    if (s > 0 && !isolated) positive_ok = false;
    if (s < 0 && !isolated) negative_ok = false;
  }
  return positive_ok || negative_ok;
}

std::vector<std::size_t> kept_columns(std::size_t n,
                                      std::span<const std::size_t> removed) {
  std::vector<bool> drop(n, false);
  for (std::size_t j : removed) {
    if (j >= n)
      throw InputError("column index " + std::to_string(j + 1) +
                       " out of range 1.." + std::to_string(n));
    drop[j] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (!drop[j]) keep.push_back(j);
  return keep;
}

} // namespace

bool can_eliminate(const SignPattern &p, std::size_t j) {
  if (j >= p.cols())
    throw InputError("column index " + std::to_string(j + 1) +
                     " out of range 1.." + std::to_string(p.cols()));
  return can_eliminate_among(p, j, std::vector<bool>(p.cols(), true));
}

CoeffMatrix eliminate(const CoeffMatrix &a, std::span<const std::size_t> cols) {
  auto keep = kept_columns(a.cols(), cols);
  std::vector<std::size_t> rows(a.rows());
  std::iota(rows.begin(), rows.end(), 0);
  return submatrix(a, rows, keep);
}

SignPattern eliminate(const SignPattern &p, std::span<const std::size_t> cols) {
  auto keep = kept_columns(p.cols(), cols);
  std::vector<std::int8_t> data;
  data.reserve(p.rows() * keep.size());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j : keep) data.push_back(p(i, j));
  return SignPattern(p.rows(), keep.size(), std::move(data));
}

ReductionResult greedy_reduce(const SignPattern &p) {
  std::vector<bool> active(p.cols(), true);
  ReductionResult result;
  for (;;) {
    bool progressed = false;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (!active[j] || !can_eliminate_among(p, j, active)) continue;
      active[j] = false;
      result.eliminated.push_back(j);
      progressed = true;
      break;
    }
    if (!progressed) break;
  }
  for (std::size_t j = 0; j < p.cols(); ++j)
    if (active[j]) result.residual.push_back(j);
  return result;
}

std::optional<EliminationOrdering>
find_elimination_ordering(const SignPattern &p) {
  auto reduced = greedy_reduce(p);
  if (!reduced.residual.empty()) return std::nullopt;
  return EliminationOrdering{std::move(reduced.eliminated)};
}

bool is_elimination_ordering(const SignPattern &p,
                             std::span<const std::size_t> order) {
  if (order.size() != p.cols()) return false;
  std::vector<bool> seen(p.cols(), false);
  for (std::size_t j : order) {
    if (j >= p.cols() || seen[j]) return false;
    seen[j] = true;
  }
  for (std::size_t t = 0; t < order.size(); ++t) {
    auto prefix = order.subspan(0, t);
    SignPattern reduced = eliminate(p, prefix);
    // Position of original column order[t] among the surviving columns.
    std::size_t local = 0;
    for (std::size_t k = 0; k < order[t]; ++k)
      if (std::find(prefix.begin(), prefix.end(), k) == prefix.end()) ++local;
    if (!can_eliminate(reduced, local)) return false;
  }
  return true;
}

std::optional<EliminationOrdering>
exhaustive_ordering_oracle(const SignPattern &p) {
  if (p.cols() > kOracleMaxColumns)
    throw CapabilityError("exhaustive ordering oracle limited to " +
                          std::to_string(kOracleMaxColumns) + " columns, got " +
                          std::to_string(p.cols()));
  std::vector<std::size_t> order(p.cols());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (is_elimination_ordering(p, order)) return EliminationOrdering{order};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

} // namespace ilsconn
