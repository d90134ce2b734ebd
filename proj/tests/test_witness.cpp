#include "common.hpp"
#include "oracles.hpp"

#include "ilsconn/errors.hpp"
#include "ilsconn/harness.hpp"
#include "ilsconn/solution_graph.hpp"
#include "ilsconn/witness.hpp"

#include <doctest.h>

using namespace ilsconn;
using testing::B;
using testing::M;
using testing::Q;

namespace {

const CoeffMatrix kCycle2 = M({{1, 1}, {-1, -1}});
const CoeffMatrix kCycle3 = M({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}});
const CoeffMatrix kCanonical = M({{1, 1, 0}, {1, -1, 0}, {-1, 0, 1}, {-1, 0, -1}});

// The two points are feasible, lie in different components, and every
// Hamming neighbour of p is infeasible.
void check_witness(const CoeffMatrix &a, int d, const Witness &w) {
  auto pts = oracle::feasible(a, w.b, d);
  auto ids = oracle::component_ids(pts);
  auto at = [&](const Point &x) {
    auto it = std::find(pts.begin(), pts.end(), x);
    REQUIRE(it != pts.end());
    return ids[static_cast<std::size_t>(it - pts.begin())];
  };
  CHECK(at(w.p) != at(w.q));
}

void check_isolated(const CoeffMatrix &a, int d, const Witness &w) {
  for (std::size_t j = 0; j < w.p.size(); ++j)
    for (int v = 0; v <= d; ++v) {
      if (v == w.p[j]) continue;
      Point y = w.p;
      y[j] = v;
      CHECK_FALSE(is_feasible(a, w.b, DomainBound(d), y));
    }
}

} // namespace

TEST_CASE("cycle form detection") {
  CHECK(is_cycle_form(kCycle2));
  CHECK(is_cycle_form(kCycle3));
  CHECK_FALSE(is_cycle_form(M({{1, 1}, {1, -1}})));
  CHECK_FALSE(is_cycle_form(M({{1, 0, -1}, {-1, 1, 1}, {0, -1, 1}})));
  CHECK_FALSE(is_cycle_form(M({{1}})));
  CHECK_THROWS_AS(build_bF(M({{1, 1}, {1, 1}}), DomainBound(1)), InputError);
  CHECK_THROWS_AS(build_pq(M({{1, 0}, {0, 1}}), DomainBound(1)), InputError);
}

TEST_CASE("b^F examples") {
  CHECK(build_bF(kCycle2, DomainBound(1)) == B({1, -1}));
  CHECK(build_bF(kCycle3, DomainBound(1)) == B({0, 0, 0}));
  CHECK(build_bF(M({{1, -1}, {-1, 1}}), DomainBound(2)) == B({0, 0}));
}

TEST_CASE("b^F off-diagonal branch") {
  // Row 1 has |a_12| > |a_11|, so it takes the second branch.
  auto af = M({{1, 3}, {-1, -1}});
  CHECK_FALSE(uses_diagonal_branch(af, 0));
  CHECK(uses_diagonal_branch(af, 1));
  // p = (1, 0). Row 1: 1*1 + 3*0 = 1. Row 2 (diagonal): q-based value
  // -1*(1-1) + -1*(0+1) = -1.
  CHECK(build_bF(af, DomainBound(1)) == B({1, -1}));
  auto [p, q] = build_pq(af, DomainBound(1));
  CHECK(p == Point{1, 0});
  CHECK(q == Point{0, 1});
}

TEST_CASE("p and q examples") {
  auto [p3, q3] = build_pq(kCycle3, DomainBound(1));
  CHECK(p3 == Point{1, 1, 1});
  CHECK(q3 == Point{0, 0, 0});
  auto [p2, q2] = build_pq(kCycle2, DomainBound(1));
  CHECK(p2 == Point{1, 0});
  CHECK(q2 == Point{0, 1});
  auto [p4, q4] = build_pq(kCycle2, DomainBound(3));
  CHECK(p4 == Point{3, 0});
  CHECK(q4 == Point{2, 1});
}

TEST_CASE("extension to the full system") {
  auto padded = M({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}, {0, 0, 5}});
  ForbiddenPattern fp{{0, 1, 2}, {0, 1, 2}};
  auto b = extend_to_full(padded, fp, B({0, 0, 0}), DomainBound(1));
  CHECK(b == B({0, 0, 0, -15}));

  auto extra = M({{1, 0, -1, 1}, {-1, 1, 0, 1}, {0, -1, 1, 0}});
  CHECK(complement_assignment(extra, fp, DomainBound(1)) == Point{-1, -1, -1, 1});
  CHECK(extend_to_full(extra, fp, B({0, 0, 0}), DomainBound(1)) == B({1, 1, 0}));
  CHECK(lift_point(extra, fp, Point{1, 1, 1}, DomainBound(1)) == Point{1, 1, 1, 1});

  // Whole-matrix pattern: extension is the identity.
  CHECK(extend_to_full(kCycle3, fp, B({0, 0, 0}), DomainBound(1)) == B({0, 0, 0}));

  auto dirty = M({{1, 1, 1}, {-1, -1, -1}});
  CHECK_THROWS_AS(extend_to_full(dirty, {{0, 1}, {0, 1}}, B({1, -1}), DomainBound(1)),
                  PreconditionError);
}

TEST_CASE("analytic witness examples") {
  auto w2 = analytic_witness(kCycle2, DomainBound(1));
  REQUIRE(w2);
  CHECK(w2->b == B({1, -1}));
  CHECK(w2->p == Point{1, 0});
  CHECK(w2->q == Point{0, 1});
  CHECK(w2->method == WitnessMethod::Analytic);

  auto w3 = analytic_witness(kCycle3, DomainBound(1));
  REQUIRE(w3);
  CHECK(w3->b == B({0, 0, 0}));
  CHECK(w3->p == Point{1, 1, 1});
  CHECK(w3->q == Point{0, 0, 0});

  CHECK_FALSE(analytic_witness(M({{1, 1, 1}, {-1, -1, -1}}), DomainBound(1)));
  CHECK_FALSE(analytic_witness(M({{1, 0}, {0, 1}}), DomainBound(1)));
}

TEST_CASE("analytic witness with rational magnitudes") {
  for (auto a : {Q({{"3/2", "-1/3"}, {"-2", "5/4"}}),
                 Q({{"1/2", "0", "-7"}, {"-3", "2/3", "0"}, {"0", "-5", "1/4"}}),
                 Q({{"5", "0", "0", "-1/2"}, {"-1/3", "1", "0", "0"},
                    {"0", "-4", "9/2", "0"}, {"0", "0", "-1", "2"}})}) {
    for (int d = 1; d <= 3; ++d) {
      auto w = analytic_witness(a, DomainBound(d));
      REQUIRE(w);
      check_witness(a, d, *w);
      check_isolated(a, d, *w);
      CHECK(hamming_distance(w->p, w->q) == a.rows());
    }
  }
}

TEST_CASE("dirty complement falls back to search") {
  auto a = M({{1, 1, 1}, {-1, -1, -1}});
  auto w = search_witness(a, DomainBound(1));
  REQUIRE(w);
  CHECK(w->method == WitnessMethod::Search);
  check_witness(a, 1, *w);
  auto v = decide_universal(a, DomainBound(1));
  CHECK_FALSE(v.universally_connected);
  CHECK(v.path == DecisionPath::SearchFallback);
}

TEST_CASE("universally connected examples") {
  CHECK_FALSE(search_witness(M({{1, 0}, {0, 1}}), DomainBound(1)));
  CHECK_FALSE(search_witness(kCanonical, DomainBound(1)));
  auto v = decide_universal(kCanonical, DomainBound(1));
  CHECK(v.universally_connected);
  CHECK(v.path == DecisionPath::GridSearch);
  CHECK_FALSE(v.has_forbidden_pattern);
  CHECK_FALSE(v.has_elimination_ordering);
  CHECK(v.searched_grid_size > 0);

  auto fast = decide_universal(kCycle2, DomainBound(1));
  CHECK_FALSE(fast.universally_connected);
  CHECK(fast.path == DecisionPath::AnalyticWitness);
  CHECK(fast.searched_grid_size == 0);
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS(search_witness(kCanonical, DomainBound(1), 3), CapabilityError);
  CoeffMatrix wide(1, 30);
  CHECK_THROWS_AS(search_witness(wide, DomainBound(1)), CapabilityError);
}

TEST_CASE("grid search matches the brute-force right-hand side oracle") {
  harness::CampaignConfig cfg;
  cfg.exhaustive = true;
  cfg.rows = 2;
  cfg.cols = 2;
  for (std::uint64_t k = 0; k < harness::exhaustive_count(cfg); ++k) {
    auto a = harness::exhaustive_matrix(cfg, k).to_coeff();
    for (int d = 1; d <= 2; ++d) {
      auto w = search_witness(a, DomainBound(d));
      auto brute = oracle::first_disconnecting_rhs(a, d);
      REQUIRE(w.has_value() == brute.has_value());
      if (w) {
        CHECK(w->b == *brute);
        check_witness(a, d, *w);
      }
    }
  }
  harness::Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 2 + static_cast<std::size_t>(rng.uniform(0, 1));
    auto a = testing::random_int_matrix(rng, m, 3, -2, 2);
    auto w = search_witness(a, DomainBound(1));
    auto brute = oracle::first_disconnecting_rhs(a, 1);
    REQUIRE(w.has_value() == brute.has_value());
    if (w) CHECK(w->b == *brute);
  }
}

TEST_CASE("analytic witness on planted patterns") {
  harness::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = harness::planted_fp_matrix(rng, 4, 4, -2, 2).to_coeff();
    int d = static_cast<int>(rng.uniform(1, 2));
    auto fp = find_minimal_pattern(a);
    REQUIRE(fp);
    auto w = analytic_witness(a, DomainBound(d));
    CHECK(w.has_value() == complement_is_clean(a, *fp));
    if (w) {
      check_witness(a, d, *w);
      CHECK(hamming_distance(w->p, w->q) == fp->size());
    }
    CHECK_FALSE(decide_universal(a, DomainBound(d)).universally_connected);
  }
}
