#include "common.hpp"

#include "ilsconn/errors.hpp"
#include "ilsconn/forbidden_pattern.hpp"
#include "ilsconn/harness.hpp"

#include <doctest.h>

#include <set>

using namespace ilsconn;
using namespace ilsconn::harness;

TEST_CASE("property names round trip") {
  CHECK(all_properties().size() == 9);
  for (auto p : all_properties()) CHECK(parse_property(to_string(p)) == p);
  CHECK(parse_property("thm1-witness") == Property::Thm1Witness);
  CHECK_THROWS_AS(parse_property("no-such-property"), InputError);
}

TEST_CASE("config validation") {
  CampaignConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.entry_min = 2;
  cfg.entry_max = 1;
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg = {};
  cfg.d_list = {};
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg = {};
  cfg.d_list = {0};
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg = {};
  cfg.rows = 0;
  CHECK_THROWS_AS(validate(cfg), InputError);
}

TEST_CASE("rng is reproducible and in range") {
  Rng a(5), b(5);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
  auto x = Rng::for_item(1, 7), y = Rng::for_item(1, 7), z = Rng::for_item(1, 8);
  CHECK(x.next() == y.next());
  CHECK(Rng::for_item(1, 7).next() != z.next());
  Rng r(9);
  std::set<long long> seen;
  for (int k = 0; k < 2000; ++k) {
    auto v = r.uniform(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
    seen.insert(v);
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("exhaustive generation counts") {
  CampaignConfig cfg;
  cfg.exhaustive = true;
  cfg.rows = cfg.cols = 2;
  CHECK(exhaustive_count(cfg) == 81);
  cfg.rows = cfg.cols = 3;
  CHECK(exhaustive_count(cfg) == 19683);

  cfg.rows = cfg.cols = 2;
  auto stream = generate_matrices(cfg);
  std::set<std::vector<int>> distinct;
  std::size_t n = 0;
  while (auto a = stream.next()) {
    std::vector<int> key;
    for (const auto &v : a->data()) key.push_back(static_cast<int>(v));
    distinct.insert(key);
    ++n;
  }
  CHECK(n == 81);
  CHECK(distinct.size() == 81);
  CHECK(exhaustive_matrix(cfg, 0).entries == std::vector<int>{-1, -1, -1, -1});
  CHECK(exhaustive_matrix(cfg, 1).entries == std::vector<int>{-1, -1, -1, 0});
}

TEST_CASE("sampled streams depend only on the seed") {
  CampaignConfig cfg;
  cfg.trials = 20;
  cfg.seed = 42;
  auto s1 = generate_matrices(cfg), s2 = generate_matrices(cfg);
  for (int k = 0; k < 20; ++k) {
    auto a = s1.next(), b = s2.next();
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a == *b);
  }
  CHECK_FALSE(s1.next());
}

TEST_CASE("planted matrices contain a pattern") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    auto m = planted_fp_matrix(rng, 4, 4, -2, 2);
    CHECK(find_minimal_pattern(m.to_coeff()).has_value());
    for (int v : m.entries) {
      CHECK(v >= -2);
      CHECK(v <= 2);
    }
  }
}

TEST_CASE("small campaigns pass") {
  CampaignConfig cfg;
  cfg.exhaustive = true;
  cfg.rows = cfg.cols = 2;
  for (auto p : {Property::LemmaFpNoEo, Property::LemmaShapeEquiv, Property::GreedyOracle,
                 Property::Thm2Connected}) {
    auto r = run_campaign(p, cfg);
    CHECK(r.passed());
    CHECK(r.failures() == 0);
    CHECK(r.evaluated == 81);
  }

  CampaignConfig sampled;
  sampled.rows = sampled.cols = 3;
  sampled.trials = 50;
  sampled.d_list = {1, 2};
  for (auto p : {Property::Thm1Witness, Property::PqSlack, Property::TransformInvariance}) {
    auto r = run_campaign(p, sampled);
    CHECK(r.passed());
    CHECK(r.accepted == 50);
  }
  sampled.rows = 4;
  sampled.trials = 30;
  auto path = run_campaign(Property::Lemma6Path, sampled);
  CHECK(path.passed());
  CHECK(path.check("path-feasible")->passed > 0);
}

TEST_CASE("reports are reproducible apart from runtime") {
  CampaignConfig cfg;
  cfg.rows = cfg.cols = 3;
  cfg.trials = 40;
  cfg.seed = 9;
  auto a = to_json(run_campaign(Property::Thm1Witness, cfg));
  cfg.threads = 1;
  auto b = to_json(run_campaign(Property::Thm1Witness, cfg));
  a.erase("runtimeMs");
  b.erase("runtimeMs");
  a["config"].erase("threads");
  b["config"].erase("threads");
  CHECK(a == b);
}

TEST_CASE("capability guard surfaces from the campaign") {
  CampaignConfig cfg;
  cfg.rows = 3;
  cfg.cols = 3;
  cfg.trials = 5;
  cfg.guard = 2;
  CHECK_THROWS_AS(run_campaign(Property::Thm2Connected, cfg), CapabilityError);
}
