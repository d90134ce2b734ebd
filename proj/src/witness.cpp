#include "ilsconn/witness.hpp"

#include "ilsconn/elimination.hpp"
#include "ilsconn/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

namespace ilsconn {

namespace {

std::size_t prev_index(std::size_t s, std::size_t len) {
  return (s + len - 1) % len;
}

void require_cycle_form(const CoeffMatrix &af) {
  if (!is_cycle_form(af)) throw InputError("matrix is not in cycle form");
}

bool contains(const std::vector<std::size_t> &v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Exhaustive search over the right-hand side grid. Points of D^n are
// identified with their lexicographic index; row thresholds are kept as
// ranks into each row's sorted value set so the inner loops never touch
// rationals.
class GridSearch {
public:
  GridSearch(const CoeffMatrix &a, DomainBound d, std::uint64_t enum_guard)
      : a_(a), base_(static_cast<std::size_t>(d.value()) + 1) {
    std::uint64_t total = domain_size(a.cols(), d);
    if (total > enum_guard || total > std::numeric_limits<std::uint32_t>::max())
      throw CapabilityError("domain has " + std::to_string(total) +
                            " points, enumeration guard is " +
                            std::to_string(enum_guard));
    points_ = static_cast<std::size_t>(total);
    weights_.assign(a.cols(), 1);
    for (std::size_t j = a.cols(); j-- > 1;) weights_[j - 1] = weights_[j] * base_;

    values_.resize(a.rows());
    ranks_.assign(a.rows(), std::vector<std::uint32_t>(points_));
    std::vector<std::vector<Rational>> raw(a.rows(), std::vector<Rational>(points_));
    Point x(a.cols(), 0);
    for (std::size_t p = 0; p < points_; ++p) {
      decode(p, x);
      for (std::size_t i = 0; i < a.rows(); ++i) raw[i][p] = row_dot(a, i, x);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      auto &vals = values_[i];
      vals = raw[i];
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (std::size_t p = 0; p < points_; ++p)
        ranks_[i][p] = static_cast<std::uint32_t>(
            std::lower_bound(vals.begin(), vals.end(), raw[i][p]) - vals.begin());
    }
    stamp_.assign(points_, 0);
  }

  std::uint64_t grid_size() const {
    std::uint64_t total = 1;
    for (const auto &vals : values_) {
      if (total > std::numeric_limits<std::uint64_t>::max() / vals.size())
        return std::numeric_limits<std::uint64_t>::max();
      total *= vals.size();
    }
    return total;
  }

  /// Lexicographically first disconnecting right-hand side.
  std::optional<RhsVector> first_disconnecting() {
    std::vector<std::uint32_t> all(points_);
    for (std::size_t p = 0; p < points_; ++p) all[p] = static_cast<std::uint32_t>(p);
    choice_.assign(a_.rows(), 0);
    if (!descend(0, all)) return std::nullopt;
    RhsVector b(a_.rows());
    for (std::size_t i = 0; i < a_.rows(); ++i) b[i] = values_[i][choice_[i]];
    return b;
  }

private:
  void decode(std::size_t p, Point &x) const {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = static_cast<int>((p / weights_[j]) % base_);
  }

  bool descend(std::size_t row, const std::vector<std::uint32_t> &current) {
    // At most one feasible point: every refinement is connected too.
    if (current.size() <= 1) return false;
    if (row == a_.rows()) return disconnected(current);
    std::vector<std::uint32_t> next;
    next.reserve(current.size());
    const auto &rank = ranks_[row];
    for (std::size_t k = 0; k < values_[row].size(); ++k) {
      next.clear();
      for (std::uint32_t p : current)
        if (rank[p] >= k) next.push_back(p);
      if (next.size() <= 1) break;
      choice_[row] = k;
      if (descend(row + 1, next)) return true;
    }
    return false;
  }

  bool disconnected(const std::vector<std::uint32_t> &feasible) {
    if (epoch_ > std::numeric_limits<std::uint32_t>::max() - 2) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 0;
    }
    const std::uint32_t member = ++epoch_;
    const std::uint32_t seen = ++epoch_;
    for (std::uint32_t p : feasible) stamp_[p] = member;
    stack_.assign(1, feasible.front());
    stamp_[feasible.front()] = seen;
    std::size_t reached = 1;
    while (!stack_.empty()) {
      std::size_t p = stack_.back();
      stack_.pop_back();
      for (std::size_t j = 0; j < weights_.size(); ++j) {
        std::size_t w = weights_[j];
        std::size_t digit = (p / w) % base_;
        std::size_t origin = p - digit * w;
        for (std::size_t v = 0; v < base_; ++v) {
          if (v == digit) continue;
          std::size_t q = origin + v * w;
          if (stamp_[q] != member) continue;
          stamp_[q] = seen;
          stack_.push_back(static_cast<std::uint32_t>(q));
          ++reached;
        }
      }
    }
    return reached < feasible.size();
  }

  const CoeffMatrix &a_;
  std::size_t base_;
  std::size_t points_ = 0;
  std::vector<std::size_t> weights_;
  std::vector<std::vector<Rational>> values_;
  std::vector<std::vector<std::uint32_t>> ranks_;
  std::vector<std::size_t> choice_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stack_;
};

// Both points feasible and in different components, checked by the exact
// enumeration route.
bool validates(const CoeffMatrix &a, DomainBound d, const Witness &w,
               std::uint64_t guard) {
  auto report = is_connected(a, w.b, d, guard);
  auto locate = [&](const Point &x) -> std::optional<std::size_t> {
    auto it = std::lower_bound(report.points.begin(), report.points.end(), x);
    if (it == report.points.end() || *it != x) return std::nullopt;
    return report.labels[static_cast<std::size_t>(it - report.points.begin())];
  };
  auto lp = locate(w.p);
  auto lq = locate(w.q);
  return lp && lq && *lp != *lq;
}

} // namespace

const char *to_string(WitnessMethod m) {
  return m == WitnessMethod::Analytic ? "analytic" : "search";
}

const char *to_string(DecisionPath p) {
  switch (p) {
  case DecisionPath::AnalyticWitness: return "forbidden-pattern-analytic";
  case DecisionPath::SearchFallback: return "forbidden-pattern-search";
  case DecisionPath::GridSearch: return "grid-search";
  }
  return "?";
}

bool is_cycle_form(const CoeffMatrix &af) {
  const std::size_t len = af.rows();
  if (len < 2 || af.cols() != len) return false;
  for (std::size_t s = 0; s < len; ++s) {
    for (std::size_t t = 0; t < len; ++t) {
      bool expected = t == s || t == prev_index(s, len);
      if (expected == af(s, t).is_zero()) return false;
    }
    if (sgn(af(s, s)) * sgn(af((s + 1) % len, s)) >= 0) return false;
  }
  return true;
}

CoeffMatrix cycle_form(const CoeffMatrix &a, const ForbiddenPattern &fp) {
  if (!verify_pattern(a, fp))
    throw InputError("not a forbidden pattern of this matrix");
  return submatrix(a, fp.rows, fp.cols);
}

bool uses_diagonal_branch(const CoeffMatrix &af, std::size_t s) {
  Rational largest = 0;
  for (const auto &v : af.row(s)) largest = std::max(largest, abs(v));
  return largest == abs(af(s, s));
}

RhsVector build_bF(const CoeffMatrix &af, DomainBound d) {
  require_cycle_form(af);
  const std::size_t len = af.rows();
  RhsVector bf(len);
  for (std::size_t s = 0; s < len; ++s) {
    bool diagonal = uses_diagonal_branch(af, s);
    Rational sum = 0;
    for (std::size_t k = 0; k < len; ++k) {
      Rational target = sf(af(k, k)) * d.value();
      if (diagonal) target -= sgn(af(k, k));
      sum += af(s, k) * target;
    }
    bf[s] = sum;
  }
  return bf;
}

std::pair<Point, Point> build_pq(const CoeffMatrix &af, DomainBound d) {
  require_cycle_form(af);
  Point p(af.rows()), q(af.rows());
  for (std::size_t t = 0; t < af.rows(); ++t) {
    // SF of a nonzero entry is 0 or 1.
    p[t] = sgn(af(t, t)) > 0 ? d.value() : 0;
    q[t] = p[t] - sgn(af(t, t));
  }
  return {p, q};
}

Point complement_assignment(const CoeffMatrix &a, const ForbiddenPattern &fp,
                            DomainBound d) {
  Point x(a.cols(), -1);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (contains(fp.cols, j)) continue;
    bool nonnegative = true;
    for (std::size_t i : fp.rows) nonnegative &= sgn(a(i, j)) >= 0;
    x[j] = nonnegative ? d.value() : 0;
  }
  return x;
}

RhsVector extend_to_full(const CoeffMatrix &a, const ForbiddenPattern &fp,
                         const RhsVector &bf, DomainBound d) {
  if (bf.size() != fp.size())
    throw InputError("b^F length does not match pattern size");
  if (!complement_is_clean(a, fp))
    throw PreconditionError("pattern complement has an opposite-sign pair");
  Point fixed = complement_assignment(a, fp, d);
  const auto n = static_cast<long long>(a.cols());
  RhsVector b(a.rows());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    Rational alpha = 0;
    for (const auto &v : a.row(k)) alpha = std::max(alpha, abs(v));
    b[k] = -alpha * n * d.value();
  }
  for (std::size_t s = 0; s < fp.size(); ++s) {
    std::size_t i = fp.rows[s];
    Rational value = bf[s];
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (fixed[j] > 0) value += a(i, j) * fixed[j];
    b[i] = value;
  }
  return b;
}

Point lift_point(const CoeffMatrix &a, const ForbiddenPattern &fp,
                 const Point &local, DomainBound d) {
  if (local.size() != fp.size())
    throw InputError("local point length does not match pattern size");
  Point x = complement_assignment(a, fp, d);
  for (std::size_t t = 0; t < fp.size(); ++t) x[fp.cols[t]] = local[t];
  return x;
}

std::optional<Witness> analytic_witness(const CoeffMatrix &a, DomainBound d,
                                        std::uint64_t guard) {
  auto fp = find_minimal_pattern(a);
  if (!fp || !complement_is_clean(a, *fp)) return std::nullopt;
  CoeffMatrix af = cycle_form(a, *fp);
  RhsVector bf = build_bF(af, d);
  auto [p, q] = build_pq(af, d);
  Witness w{extend_to_full(a, *fp, bf, d), lift_point(a, *fp, p, d),
            lift_point(a, *fp, q, d), WitnessMethod::Analytic};
  if (!validates(a, d, w, guard))
    throw DefectError("analytic witness failed validation");
  return w;
}

std::uint64_t witness_grid_size(const CoeffMatrix &a, DomainBound d,
                                std::uint64_t enumeration_guard) {
  return GridSearch(a, d, enumeration_guard).grid_size();
}

namespace {

std::optional<Witness> run_search(const CoeffMatrix &a, DomainBound d,
                                  std::uint64_t guard,
                                  std::uint64_t &grid_size) {
  GridSearch search(a, d, kDefaultEnumerationGuard);
  grid_size = search.grid_size();
  if (grid_size > guard)
    throw CapabilityError("right-hand side grid has " +
                          std::to_string(grid_size) +
                          " cells, search guard is " + std::to_string(guard));
  auto b = search.first_disconnecting();
  if (!b) return std::nullopt;
  auto report = is_connected(a, *b, d);
  if (!report.certificate)
    throw DefectError("grid search and enumeration disagree on connectivity");
  return Witness{std::move(*b), report.certificate->first,
                 report.certificate->second, WitnessMethod::Search};
}

} // namespace

std::optional<Witness> search_witness(const CoeffMatrix &a, DomainBound d,
                                      std::uint64_t guard) {
  std::uint64_t grid_size = 0;
  return run_search(a, d, guard, grid_size);
}

UniversalVerdict decide_universal(const CoeffMatrix &a, DomainBound d,
                                  std::uint64_t guard) {
  UniversalVerdict verdict;
  auto fp = find_minimal_pattern(a);
  verdict.has_forbidden_pattern = fp.has_value();
  verdict.has_elimination_ordering = find_elimination_ordering(a).has_value();
  if (fp) {
    if ((verdict.witness = analytic_witness(a, d))) {
      verdict.path = DecisionPath::AnalyticWitness;
      return verdict;
    }
    verdict.path = DecisionPath::SearchFallback;
  } else {
    verdict.path = DecisionPath::GridSearch;
  }
  verdict.witness = run_search(a, d, guard, verdict.searched_grid_size);
  verdict.universally_connected = !verdict.witness;
  if (fp && verdict.universally_connected)
    throw DefectError("forbidden pattern present but grid search found no "
                      "disconnecting right-hand side");
  return verdict;
}

} // namespace ilsconn
