#include "common.hpp"

#include "ilsconn/elimination.hpp"
#include "ilsconn/errors.hpp"
#include "ilsconn/forbidden_pattern.hpp"
#include "ilsconn/harness.hpp"

#include <doctest.h>

using namespace ilsconn;
using testing::M;
using Cols = std::vector<std::size_t>;

namespace {

const CoeffMatrix kCycle4 =
    M({{1, 0, 0, -1}, {-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}});

SignPattern exhaustive_pattern(std::size_t m, std::size_t n, std::uint64_t index) {
  harness::CampaignConfig cfg;
  cfg.rows = m;
  cfg.cols = n;
  cfg.exhaustive = true;
  return harness::exhaustive_matrix(cfg, index).to_signs();
}

} // namespace

TEST_CASE("can_eliminate examples") {
  CHECK(can_eliminate(M({{1, 0}, {0, 1}}), 0));
  CHECK_FALSE(can_eliminate(M({{1, 1}, {-1, -1}}), 0));
  CHECK_FALSE(can_eliminate(M({{1, 1}, {-1, -1}}), 1));
  CHECK(can_eliminate(M({{-1, 2}, {0, 1}}), 0));
  // Second condition: the single negative row is zero elsewhere.
  CHECK(can_eliminate(M({{1, 1}, {-1, 0}}), 0));
  CHECK_THROWS_AS(can_eliminate(M({{1}}), 1), InputError);
}

TEST_CASE("eliminate drops the listed columns") {
  Cols j{1};
  CHECK(eliminate(M({{1, 2, 3}}), j) == M({{1, 3}}));
  Cols all{0, 1, 2};
  auto e = eliminate(M({{1, 2, 3}, {4, 5, 6}}), all);
  CHECK(e.rows() == 2);
  CHECK(e.cols() == 0);
  Cols none;
  CHECK(eliminate(M({{1, 2}}), none) == M({{1, 2}}));
  Cols bad{3};
  CHECK_THROWS_AS(eliminate(M({{1, 2}}), bad), InputError);
}

TEST_CASE("greedy reduction examples") {
  auto r = greedy_reduce(M({{1, 0}, {0, 1}}));
  CHECK(r.eliminated == Cols{0, 1});
  CHECK(r.residual.empty());

  auto blocked = greedy_reduce(M({{1, 1}, {-1, -1}}));
  CHECK(blocked.eliminated.empty());
  CHECK(blocked.residual == Cols{0, 1});

  auto cyc = greedy_reduce(kCycle4);
  CHECK(cyc.eliminated.empty());
  CHECK(cyc.residual == Cols{0, 1, 2, 3});
}

TEST_CASE("elimination ordering examples") {
  CHECK(find_elimination_ordering(M({{1, 0}, {0, 1}}))->columns == Cols{0, 1});
  CHECK_FALSE(find_elimination_ordering(M({{1, 1}, {-1, -1}})));
  CHECK(find_elimination_ordering(M({{-1, 2}, {0, 1}}))->columns == Cols{0, 1});
  CHECK_FALSE(find_elimination_ordering(kCycle4));
  // Zero columns are always eliminable.
  CHECK(find_elimination_ordering(M({{0, 0}, {0, 0}}))->columns == Cols{0, 1});
}

TEST_CASE("is_elimination_ordering follows the definition") {
  auto p = sign_pattern(M({{1, -1}, {-1, 0}}));
  // Column 1 passes through its lone negative row, which is zero elsewhere.
  CHECK(is_elimination_ordering(p, Cols{0, 1}));
  // Column 2 has no positive row at all.
  CHECK(is_elimination_ordering(p, Cols{1, 0}));
  CHECK_FALSE(is_elimination_ordering(sign_pattern(M({{1, 1}, {-1, -1}})), Cols{0, 1}));
  CHECK_FALSE(is_elimination_ordering(p, Cols{0}));
  CHECK_FALSE(is_elimination_ordering(p, Cols{0, 0}));
}

TEST_CASE("oracle capability guard") {
  SignPattern wide(1, kOracleMaxColumns + 1);
  CHECK_THROWS_AS(exhaustive_ordering_oracle(wide), CapabilityError);
  SignPattern ok(1, kOracleMaxColumns);
  CHECK(exhaustive_ordering_oracle(ok).has_value());
}

TEST_CASE("greedy agrees with the exhaustive oracle on every 3x3 sign matrix") {
  std::size_t with_eo = 0;
  for (std::uint64_t k = 0; k < 19683; ++k) {
    auto p = exhaustive_pattern(3, 3, k);
    auto greedy = find_elimination_ordering(p);
    auto brute = exhaustive_ordering_oracle(p);
    REQUIRE(greedy.has_value() == brute.has_value());
    auto r = greedy_reduce(p);
    // Each greedy step is legal on the matrix left by its predecessors.
    for (std::size_t k = 0; k < r.eliminated.size(); ++k) {
      std::span<const std::size_t> before(r.eliminated.data(), k);
      auto rest = eliminate(p, before);
      std::size_t local = r.eliminated[k];
      for (auto c : before) local -= c < r.eliminated[k];
      CHECK(can_eliminate(rest, local));
    }
    CHECK(is_elimination_ordering(p, r.eliminated) == r.residual.empty());
    auto rest = eliminate(p, r.eliminated);
    for (std::size_t j = 0; j < rest.cols(); ++j) CHECK_FALSE(can_eliminate(rest, j));
    if (greedy) {
      ++with_eo;
      CHECK(is_elimination_ordering(p, greedy->columns));
      CHECK(is_elimination_ordering(p, brute->columns));
    }
  }
  // Frozen from the brute-force pattern oracle (matrices with no sign cycle).
  CHECK(with_eo == 13635u);
}

TEST_CASE("ordering existence is invariant under permutation and flips") {
  harness::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = testing::random_int_matrix(rng, 4, 4, -1, 1);
    std::vector<std::size_t> rp{0, 1, 2, 3}, cp{0, 1, 2, 3};
    rng.shuffle(rp);
    rng.shuffle(cp);
    bool base = find_elimination_ordering(a).has_value();
    CHECK(find_elimination_ordering(permute(a, rp, cp)).has_value() == base);
    std::vector<std::size_t> flip;
    for (std::size_t j = 0; j < 4; ++j)
      if (rng.coin()) flip.push_back(j);
    auto f = flip_columns(a, RhsVector(4, 0), flip, DomainBound(1));
    CHECK(find_elimination_ordering(f.matrix).has_value() == base);
  }
}
