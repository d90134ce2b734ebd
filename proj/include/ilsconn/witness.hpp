#pragma once

#include "ilsconn/forbidden_pattern.hpp"
#include "ilsconn/matrix.hpp"
#include "ilsconn/solution_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

namespace ilsconn {

inline constexpr std::uint64_t kDefaultSearchGuard = 10'000'000;

enum class WitnessMethod { Analytic, Search };

const char *to_string(WitnessMethod m);

/// A right-hand side b together with two feasible points of G(A, b) that lie
/// in different components.
struct Witness {
  RhsVector b;
  Point p;
  Point q;
  WitnessMethod method = WitnessMethod::Analytic;
};

/// Square matrix whose row s is nonzero exactly at columns s and s - 1
/// (cyclically), with a_ss * a_{s+1,s} < 0.
bool is_cycle_form(const CoeffMatrix &af);

/// A^F with a^F_{st} = a_{i_s j_t}, taken in the pattern's orders.
CoeffMatrix cycle_form(const CoeffMatrix &a, const ForbiddenPattern &fp);

/// Whether row s of a cycle-form matrix takes the second branch of b^F,
/// i.e. its largest magnitude is attained on the diagonal. Ties go to the
/// diagonal.
bool uses_diagonal_branch(const CoeffMatrix &af, std::size_t s);

/// Right-hand side b^F for which p is an isolated vertex of G(A^F, b^F):
///
///   b_s = sum_k a_sk * d * SF(a_kk)                 off-diagonal max
///   b_s = sum_k a_sk * (d * SF(a_kk) - sgn(a_kk))   diagonal max
///
/// Throws InputError unless `af` is in cycle form.
RhsVector build_bF(const CoeffMatrix &af, DomainBound d);

/// p_t = d * SF(a_tt) and q_t = p_t - sgn(a_tt). They differ in every
/// coordinate.
std::pair<Point, Point> build_pq(const CoeffMatrix &af, DomainBound d);

/// Values for the columns outside the pattern: d where the column is
/// nonnegative on every pattern row, else 0. Pattern columns hold -1.
Point complement_assignment(const CoeffMatrix &a, const ForbiddenPattern &fp,
                            DomainBound d);

/// Full right-hand side from b^F. Pattern rows absorb the complement
/// assignment, b_i = b^F_s + sum_{j not in J} a_ij x*_j; all other rows get
/// -d * n * max_j |a_kj| and never bind. Throws PreconditionError when the
/// complement is not clean.
RhsVector extend_to_full(const CoeffMatrix &a, const ForbiddenPattern &fp,
                         const RhsVector &bf, DomainBound d);

/// Embeds a point of D^k (k = pattern size, coordinates in pattern column
/// order) into D^n using the complement assignment elsewhere.
Point lift_point(const CoeffMatrix &a, const ForbiddenPattern &fp,
                 const Point &local, DomainBound d);

/// Closed-form witness from a minimal forbidden pattern with clean
/// complement. Returns nullopt when there is no pattern or the complement is
/// dirty. The result is re-validated by enumeration; a failed validation
/// throws DefectError.
std::optional<Witness> analytic_witness(const CoeffMatrix &a, DomainBound d,
                                        std::uint64_t guard = kDefaultEnumerationGuard);

/// Number of feasibility-distinct right-hand sides: prod_i |{a_i . x}|.
/// Throws CapabilityError when the domain exceeds the enumeration guard.
std::uint64_t witness_grid_size(const CoeffMatrix &a, DomainBound d,
                                std::uint64_t enumeration_guard = kDefaultEnumerationGuard);

/// Complete search over right-hand sides. Feasibility of x for row i only
/// depends on where b_i falls among the values a_i . y, so b_i ranges over
/// those values; the first disconnecting b in lexicographic grid order is
/// returned. Nullopt means A is universally connected for this d.
std::optional<Witness> search_witness(const CoeffMatrix &a, DomainBound d,
                                      std::uint64_t guard = kDefaultSearchGuard);

enum class DecisionPath { AnalyticWitness, SearchFallback, GridSearch };

const char *to_string(DecisionPath p);

struct UniversalVerdict {
  bool universally_connected = false;
  std::optional<Witness> witness;
  DecisionPath path = DecisionPath::GridSearch;
  std::uint64_t searched_grid_size = 0; // 0 when no grid search ran
  bool has_forbidden_pattern = false;
  bool has_elimination_ordering = false;
};

/// A forbidden pattern settles the question negatively (analytic witness,
/// else search). Otherwise the full grid search decides.
UniversalVerdict decide_universal(const CoeffMatrix &a, DomainBound d,
                                  std::uint64_t guard = kDefaultSearchGuard);

} // namespace ilsconn
