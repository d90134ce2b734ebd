#include "ilsconn/harness.hpp"

#include "ilsconn/elimination.hpp"
#include "ilsconn/errors.hpp"
#include "ilsconn/forbidden_pattern.hpp"
#include "ilsconn/io.hpp"
#include "ilsconn/solution_graph.hpp"
#include "ilsconn/structure_4x3.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace ilsconn::harness {

namespace {

constexpr std::array kProperties{
    std::pair{Property::Thm1Witness, "thm1-witness"},
    std::pair{Property::Thm2Connected, "thm2-connected"},
    std::pair{Property::LemmaFpNoEo, "lemma-fp-no-eo"},
    std::pair{Property::LemmaShapeEquiv, "lemma-shape-equiv"},
    std::pair{Property::GreedyOracle, "greedy-oracle"},
    std::pair{Property::Lemma5Canonical, "lemma5-canonical"},
    std::pair{Property::Lemma6Path, "lemma6-path"},
    std::pair{Property::PqSlack, "pq-slack"},
    std::pair{Property::TransformInvariance, "transform-invariance"},
};

constexpr std::uint64_t kMaxExhaustive = 100'000'000;
// Filtered sampling gives up after this many candidates per requested trial.
constexpr std::uint64_t kMaxAttemptsPerTrial = 50'000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

bool covered_shape(std::size_t m, std::size_t n) {
  return m <= 3 || n <= 2 || (m == 4 && n == 3);
}

int magnitude_bound(const CampaignConfig &cfg) {
  return std::max({std::abs(cfg.entry_min), std::abs(cfg.entry_max), 1});
}

std::string point_str(const Point &x) { return io::json(x).dump(); }

struct CheckResult {
  std::string name;
  bool ok = true;
  std::optional<Counterexample> counterexample;
};

struct ItemOutcome {
  bool counted = true;  // false: dropped by symmetry reduction
  bool accepted = true; // passed the property's filter
  std::vector<CheckResult> results;
};

// Matrix of the work item currently evaluated on this thread, kept so an
// internal failure can still be reported with a replayable matrix.
thread_local std::optional<CoeffMatrix> current_matrix;

// Collects check results for one work item.
class Recorder {
public:
  explicit Recorder(const CoeffMatrix &a) : a_(a) { current_matrix = a; }

  bool expect(const std::string &name, bool ok,
              const std::optional<RhsVector> &b = std::nullopt,
              std::optional<int> d = std::nullopt, std::string detail = {}) {
    CheckResult r{name, ok, std::nullopt};
    if (!ok) r.counterexample = Counterexample{a_, b, d, name, std::move(detail)};
    outcome.results.push_back(std::move(r));
    return ok;
  }

  ItemOutcome outcome;

private:
  const CoeffMatrix &a_;
};

std::pair<std::size_t, std::size_t> item_shape(const CampaignConfig &cfg,
                                               Rng &rng) {
  if (!cfg.random_shape) return {cfg.rows, cfg.cols};
  return {static_cast<std::size_t>(rng.uniform(2, static_cast<long long>(cfg.rows))),
          static_cast<std::size_t>(rng.uniform(2, static_cast<long long>(cfg.cols)))};
}

IntMatrix uniform_item(const CampaignConfig &cfg, std::uint64_t index, Rng &rng) {
  if (cfg.exhaustive) return exhaustive_matrix(cfg, index);
  auto [m, n] = item_shape(cfg, rng);
  return random_matrix(rng, m, n, cfg.entry_min, cfg.entry_max);
}

IntMatrix planted_item(const CampaignConfig &cfg, std::uint64_t index, Rng &rng) {
  if (cfg.exhaustive) return exhaustive_matrix(cfg, index);
  auto [m, n] = item_shape(cfg, rng);
  return planted_fp_matrix(rng, m, n, cfg.entry_min, cfg.entry_max);
}

// Prefix validity and stuck residual of a greedy run, via explicit
// eliminated matrices.
std::size_t local_index(std::size_t col, std::span<const std::size_t> removed) {
  std::size_t local = 0;
  for (std::size_t k = 0; k < col; ++k)
    if (std::find(removed.begin(), removed.end(), k) == removed.end()) ++local;
  return local;
}

ItemOutcome eval_thm1(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  CoeffMatrix a = planted_item(cfg, index, rng).to_coeff();
  Recorder rec(a);
  auto fp = find_minimal_pattern(a);
  if (cfg.exhaustive && !fp) {
    rec.outcome.accepted = false;
    return rec.outcome;
  }
  if (!rec.expect("pattern-present", fp.has_value())) return rec.outcome;
  bool clean = complement_is_clean(a, *fp);
  for (int dv : cfg.d_list) {
    DomainBound d(dv);
    auto w = search_witness(a, d, cfg.guard);
    rec.expect("search-finds-witness", w.has_value(), std::nullopt, dv,
               "grid search found no disconnecting right-hand side");
    if (!clean) continue;
    auto aw = analytic_witness(a, d);
    rec.expect("analytic-on-clean-complement", aw.has_value(), std::nullopt, dv);
  }
  return rec.outcome;
}

ItemOutcome eval_thm2(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  CoeffMatrix a = uniform_item(cfg, index, rng).to_coeff();
  Recorder rec(a);
  if (!covered_shape(a.rows(), a.cols()))
    throw InputError("thm2-connected needs m <= 3, n <= 2 or a 4x3 shape");
  if (find_minimal_pattern(a)) {
    rec.outcome.accepted = false;
    return rec.outcome;
  }
  if (a.rows() <= 3 || a.cols() <= 2)
    rec.expect("has-elimination-ordering", find_elimination_ordering(a).has_value());
  std::vector<bool> verdicts;
  for (int dv : cfg.d_list) {
    auto w = search_witness(a, DomainBound(dv), cfg.guard);
    verdicts.push_back(!w);
    rec.expect("search-universally-connected", !w,
               w ? std::optional<RhsVector>(w->b) : std::nullopt, dv,
               w ? "disconnected at " + point_str(w->p) + " / " + point_str(w->q) : "");
  }
  if (verdicts.size() > 1)
    rec.expect("verdict-agrees-across-d",
               std::adjacent_find(verdicts.begin(), verdicts.end(),
                                  std::not_equal_to<>()) == verdicts.end());
  return rec.outcome;
}

ItemOutcome eval_fp_no_eo(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  IntMatrix im = uniform_item(cfg, index, rng);
  CoeffMatrix a = im.to_coeff();
  SignPattern sp = im.to_signs();
  Recorder rec(a);
  auto fp = find_minimal_pattern(sp);
  auto eo = find_elimination_ordering(sp);
  rec.expect("fp-implies-no-eo", !fp || !eo);
  if (fp) rec.expect("pattern-verifies", verify_pattern(sp, *fp));
  if (fp && fp->size() >= 3)
    rec.expect("minimal-pattern-clean-complement", complement_is_clean(sp, *fp));
  return rec.outcome;
}

ItemOutcome eval_shape_equiv(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  IntMatrix im = uniform_item(cfg, index, rng);
  if (!(im.rows <= 3 || im.cols <= 2))
    throw InputError("lemma-shape-equiv needs m <= 3 or n <= 2");
  CoeffMatrix a = im.to_coeff();
  SignPattern sp = im.to_signs();
  Recorder rec(a);
  bool fp = find_minimal_pattern(sp).has_value();
  bool eo = find_elimination_ordering(sp).has_value();
  rec.expect("no-eo-iff-fp", eo != fp);
  if (sp.cols() == 2)
    rec.expect("no-eo-implies-opposite-rows", eo || opposite_row_pair(sp).has_value());
  return rec.outcome;
}

ItemOutcome eval_greedy(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  IntMatrix im = uniform_item(cfg, index, rng);
  CoeffMatrix a = im.to_coeff();
  SignPattern sp = im.to_signs();
  Recorder rec(a);
  auto greedy = greedy_reduce(sp);
  auto eo = find_elimination_ordering(sp);
  auto oracle = exhaustive_ordering_oracle(sp);
  rec.expect("greedy-matches-oracle", eo.has_value() == oracle.has_value());
  std::span<const std::size_t> order = greedy.eliminated;
  bool prefix_ok = true;
  for (std::size_t t = 0; t < order.size() && prefix_ok; ++t)
    prefix_ok = can_eliminate(eliminate(sp, order.subspan(0, t)),
                              local_index(order[t], order.subspan(0, t)));
  rec.expect("greedy-prefix-valid", prefix_ok);
  SignPattern residual = eliminate(sp, order);
  bool stuck = true;
  for (std::size_t j = 0; j < residual.cols(); ++j) stuck &= !can_eliminate(residual, j);
  rec.expect("residual-stuck", stuck);
  return rec.outcome;
}

bool rows_sorted(const IntMatrix &im) {
  for (std::size_t i = 1; i < im.rows; ++i) {
    auto prev = im.entries.begin() + static_cast<long>((i - 1) * im.cols);
    auto cur = prev + static_cast<long>(im.cols);
    if (std::lexicographical_compare(cur, cur + static_cast<long>(im.cols), prev,
                                     cur))
      return false;
  }
  return true;
}

ItemOutcome eval_lemma5(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  IntMatrix im = uniform_item(cfg, index, rng);
  if (im.rows != 4 || im.cols != 3)
    throw InputError("lemma5-canonical needs the 4x3 shape");
  if (cfg.exhaustive && !rows_sorted(im)) {
    // Row order does not affect any checked property.
    ItemOutcome skip;
    skip.counted = false;
    skip.accepted = false;
    return skip;
  }
  SignPattern sp = im.to_signs();
  bool nowhere = not_eliminable_anywhere(sp);
  // Cheap rejection before building rationals.
  bool has_eo = !nowhere && find_elimination_ordering(sp).has_value();
  if (!nowhere && has_eo) {
    ItemOutcome out;
    out.accepted = false;
    return out;
  }
  CoeffMatrix a = im.to_coeff();
  Recorder rec(a);
  bool fp = find_minimal_pattern(sp).has_value();
  if (!nowhere)
    rec.expect("eliminable-without-eo-has-fp", fp);
  rec.outcome.accepted = nowhere && !fp;
  if (!rec.outcome.accepted) return rec.outcome;
  auto match = match_canonical(sp);
  bool ok = match.has_value() &&
            permute(sp, match->row_perm, match->col_perm) == canonical_4x3_pattern();
  rec.expect("matches-canonical", ok);
  for (int dv : cfg.d_list) {
    auto w = search_witness(a, DomainBound(dv), cfg.guard);
    rec.expect("universally-connected", !w,
               w ? std::optional<RhsVector>(w->b) : std::nullopt, dv);
  }
  return rec.outcome;
}

ItemOutcome eval_lemma6(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  int dv = cfg.d_list[static_cast<std::size_t>(
      rng.uniform(0, static_cast<long long>(cfg.d_list.size()) - 1))];
  DomainBound d(dv);
  long long k = magnitude_bound(cfg);
  auto mag = [&] { return Rational(rng.uniform(1, 2 * k), rng.uniform(1, 3)); };
  const SignPattern &canon = canonical_4x3_pattern();
  std::vector<Rational> data;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      int s = canon.sign(i, j);
      data.push_back(s == 0 ? Rational(0) : Rational(mag() * s));
    }
  CoeffMatrix a(4, 3, std::move(data));
  Recorder rec(a);

  std::vector<Point> feasible;
  RhsVector b(4);
  for (int attempt = 0; attempt < 64 && feasible.size() < 2; ++attempt) {
    for (std::size_t i = 0; i < 4; ++i) {
      Point x{static_cast<int>(rng.uniform(0, dv)), static_cast<int>(rng.uniform(0, dv)),
              static_cast<int>(rng.uniform(0, dv))};
      b[i] = row_dot(a, i, x);
    }
    feasible = enumerate_feasible(a, b, d);
  }
  if (feasible.size() < 2) {
    for (std::size_t i = 0; i < 4; ++i) {
      Rational total = 0;
      for (const auto &v : a.row(i)) total += abs(v);
      b[i] = -total * dv;
    }
    feasible = enumerate_feasible(a, b, d);
  }
  auto pick = [&] {
    return feasible[static_cast<std::size_t>(
        rng.uniform(0, static_cast<long long>(feasible.size()) - 1))];
  };
  Point s = pick();
  Point t = pick();
  std::string where = point_str(s) + " -> " + point_str(t);
  try {
    auto path = canonical_path(a, b, d, s, t);
    bool feasible_all = true;
    bool adjacent = true;
    for (std::size_t k2 = 0; k2 < 4; ++k2) {
      feasible_all &= is_feasible(a, b, d, path.points[k2]);
      if (k2 > 0) adjacent &= hamming_distance(path.points[k2 - 1], path.points[k2]) <= 1;
    }
    rec.expect("path-feasible", feasible_all, b, dv, where);
    rec.expect("path-steps-adjacent", adjacent, b, dv, where);
    rec.expect("path-endpoints", path.points.front() == s && path.points.back() == t,
               b, dv, where);
  } catch (const DefectError &e) {
    rec.expect("path-feasible", false, b, dv, where + ": " + e.what());
  }
  return rec.outcome;
}

ItemOutcome eval_pq_slack(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  CoeffMatrix a = planted_item(cfg, index, rng).to_coeff();
  Recorder rec(a);
  auto fp = find_minimal_pattern(a);
  if (cfg.exhaustive && !fp) {
    rec.outcome.accepted = false;
    return rec.outcome;
  }
  if (!rec.expect("pattern-present", fp.has_value())) return rec.outcome;
  CoeffMatrix af = cycle_form(a, *fp);
  if (!rec.expect("cycle-form", is_cycle_form(af))) return rec.outcome;
  const std::size_t len = af.rows();
  for (int dv : cfg.d_list) {
    DomainBound d(dv);
    RhsVector bf = build_bF(af, d);
    auto [p, q] = build_pq(af, d);
    RhsVector sp = slack(af, bf, p);
    RhsVector sq = slack(af, bf, q);
    bool p_exact = true, q_exact = true;
    for (std::size_t s = 0; s < len; ++s) {
      Rational gap = abs(af(s, s)) - abs(af(s, (s + len - 1) % len));
      bool diagonal = uses_diagonal_branch(af, s);
      Rational p_expected = diagonal ? gap : Rational(0);
      Rational q_expected = diagonal ? Rational(0) : Rational(-gap);
      p_exact &= sp[s] == p_expected && sp[s] >= 0;
      q_exact &= sq[s] == q_expected && sq[s] >= 0;
    }
    rec.expect("p-slack-exact", p_exact, bf, dv);
    rec.expect("q-slack-exact", q_exact, bf, dv);
    bool in_domain = true;
    for (std::size_t t = 0; t < len; ++t)
      in_domain &= p[t] >= 0 && p[t] <= dv && q[t] >= 0 && q[t] <= dv;
    rec.expect("pq-in-domain", in_domain, bf, dv);
    rec.expect("pq-distance-is-pattern-size", hamming_distance(p, q) == len, bf, dv);
    bool isolated = true;
    std::string detail;
    for (std::size_t z = 0; z < len && isolated; ++z) {
      for (int xi = 0; xi <= dv && isolated; ++xi) {
        if (xi == p[z]) continue;
        Point y = p;
        y[z] = xi;
        RhsVector sy = slack(af, bf, y);
        isolated = std::any_of(sy.begin(), sy.end(), [](const Rational &v) { return v < 0; });
        if (!isolated) detail = "feasible neighbour " + point_str(y);
      }
    }
    rec.expect("p-neighbors-infeasible", isolated, bf, dv, detail);
  }
  return rec.outcome;
}

ItemOutcome eval_transform(const CampaignConfig &cfg, std::uint64_t index) {
  Rng rng = Rng::for_item(cfg.seed, index);
  IntMatrix im = index % 2 == 0 && !cfg.exhaustive ? planted_item(cfg, index, rng)
                                                   : uniform_item(cfg, index, rng);
  CoeffMatrix a = im.to_coeff();
  Recorder rec(a);
  int dv = cfg.d_list[static_cast<std::size_t>(
      rng.uniform(0, static_cast<long long>(cfg.d_list.size()) - 1))];
  DomainBound d(dv);
  const std::size_t m = a.rows(), n = a.cols();
  RhsVector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    Point x(n);
    for (auto &v : x) v = static_cast<int>(rng.uniform(0, dv));
    b[i] = row_dot(a, i, x);
  }
  std::vector<std::size_t> row_perm(m), col_perm(n), flips;
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  rng.shuffle(row_perm);
  rng.shuffle(col_perm);
  for (std::size_t j = 0; j < n; ++j)
    if (rng.coin()) flips.push_back(j);

  CoeffMatrix permuted = permute(a, row_perm, col_perm);
  RhsVector permuted_b(m);
  for (std::size_t i = 0; i < m; ++i) permuted_b[i] = b[row_perm[i]];
  ColumnFlip flip = flip_columns(a, b, flips, d);

  auto base = is_connected(a, b, d);
  auto perm_report = is_connected(permuted, permuted_b, d);
  auto flip_report = is_connected(flip.matrix, flip.rhs, d);

  std::vector<Point> mapped;
  for (const auto &x : base.points) {
    Point y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = x[col_perm[j]];
    mapped.push_back(std::move(y));
  }
  std::sort(mapped.begin(), mapped.end());
  rec.expect("permutation-preserves-connectivity",
             mapped == perm_report.points &&
                 base.component_count == perm_report.component_count &&
                 base.verdict == perm_report.verdict,
             b, dv);
  mapped.clear();
  for (const auto &x : base.points) mapped.push_back(flip.map(x));
  std::sort(mapped.begin(), mapped.end());
  rec.expect("flip-preserves-connectivity",
             mapped == flip_report.points &&
                 base.component_count == flip_report.component_count &&
                 base.verdict == flip_report.verdict,
             b, dv);
  ColumnFlip back = flip_columns(flip.matrix, flip.rhs, flips, d);
  rec.expect("flip-is-involution", back.matrix == a && back.rhs == b, b, dv);
  rec.expect("sign-pattern-commutes",
             sign_pattern(permuted) == permute(sign_pattern(a), row_perm, col_perm));

  bool fp = find_minimal_pattern(a).has_value();
  rec.expect("fp-existence-invariant",
             fp == find_minimal_pattern(permuted).has_value() &&
                 fp == find_minimal_pattern(flip.matrix).has_value());
  bool eo = find_elimination_ordering(a).has_value();
  rec.expect("eo-existence-invariant",
             eo == find_elimination_ordering(permuted).has_value() &&
                 eo == find_elimination_ordering(flip.matrix).has_value());
  return rec.outcome;
}

ItemOutcome evaluate(Property property, const CampaignConfig &cfg,
                     std::uint64_t index) {
  current_matrix.reset();
  try {
    switch (property) {
    case Property::Thm1Witness: return eval_thm1(cfg, index);
    case Property::Thm2Connected: return eval_thm2(cfg, index);
    case Property::LemmaFpNoEo: return eval_fp_no_eo(cfg, index);
    case Property::LemmaShapeEquiv: return eval_shape_equiv(cfg, index);
    case Property::GreedyOracle: return eval_greedy(cfg, index);
    case Property::Lemma5Canonical: return eval_lemma5(cfg, index);
    case Property::Lemma6Path: return eval_lemma6(cfg, index);
    case Property::PqSlack: return eval_pq_slack(cfg, index);
    case Property::TransformInvariance: return eval_transform(cfg, index);
    }
  } catch (const DefectError &e) {
    CoeffMatrix a = current_matrix ? *current_matrix : CoeffMatrix();
    ItemOutcome out;
    out.results.push_back(
        {"internal-consistency", false,
         Counterexample{a, std::nullopt, std::nullopt, "internal-consistency",
                        e.what()}});
    return out;
  }
  throw InputError("unknown property");
}

std::size_t worker_count(const CampaignConfig &cfg) {
  if (cfg.threads != 0) return cfg.threads;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::vector<ItemOutcome> evaluate_batch(Property property,
                                        const CampaignConfig &cfg,
                                        std::uint64_t first, std::size_t count,
                                        std::size_t workers) {
  std::vector<ItemOutcome> out(count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = evaluate(property, cfg, first + k);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < count; k += workers)
            out[k] = evaluate(property, cfg, first + k);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

} // namespace

std::span<const Property> all_properties() {
  static const auto list = [] {
    std::array<Property, kProperties.size()> out{};
    for (std::size_t k = 0; k < kProperties.size(); ++k) out[k] = kProperties[k].first;
    return out;
  }();
  return list;
}

const char *to_string(Property p) {
  for (const auto &[prop, name] : kProperties)
    if (prop == p) return name;
  return "?";
}

Property parse_property(std::string_view name) {
  for (const auto &[prop, label] : kProperties)
    if (name == label) return prop;
  throw InputError("unknown property \"" + std::string(name) + "\"");
}

void validate(const CampaignConfig &cfg) {
  if (cfg.rows < 1 || cfg.cols < 1) throw InputError("shape must be at least 1x1");
  if (cfg.rows > kPatternSearchMaxDim || cfg.cols > kPatternSearchMaxDim)
    throw InputError("shape exceeds the pattern search limit");
  if (cfg.random_shape && (cfg.rows < 2 || cfg.cols < 2))
    throw InputError("random shapes need rows and cols of at least 2");
  if (cfg.entry_min > cfg.entry_max) throw InputError("empty entry range");
  if (cfg.d_list.empty()) throw InputError("d list is empty");
  for (int d : cfg.d_list)
    if (d < 1) throw InputError("d values must be at least 1");
  if (cfg.exhaustive && cfg.random_shape)
    throw InputError("exhaustive campaigns need a fixed shape");
  if (cfg.exhaustive && exhaustive_count(cfg) > kMaxExhaustive)
    throw InputError("exhaustive enumeration exceeds " + std::to_string(kMaxExhaustive) +
                     " matrices");
}

Rng Rng::for_item(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ index));
}

long long Rng::uniform(long long lo, long long hi) {
  auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long long>(engine_());
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do draw = engine_();
  while (draw >= limit);
  return lo + static_cast<long long>(draw % range);
}

CoeffMatrix IntMatrix::to_coeff() const {
  std::vector<Rational> data(entries.begin(), entries.end());
  return CoeffMatrix(rows, cols, std::move(data));
}

SignPattern IntMatrix::to_signs() const {
  std::vector<std::int8_t> data;
  data.reserve(entries.size());
  for (int v : entries) data.push_back(static_cast<std::int8_t>((v > 0) - (v < 0)));
  return SignPattern(rows, cols, std::move(data));
}

std::uint64_t exhaustive_count(const CampaignConfig &cfg) {
  auto base = static_cast<std::uint64_t>(cfg.entry_max - cfg.entry_min + 1);
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < cfg.rows * cfg.cols; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    total *= base;
  }
  return total;
}

IntMatrix exhaustive_matrix(const CampaignConfig &cfg, std::uint64_t index) {
  auto base = static_cast<std::uint64_t>(cfg.entry_max - cfg.entry_min + 1);
  IntMatrix im{cfg.rows, cfg.cols, std::vector<int>(cfg.rows * cfg.cols)};
  for (std::size_t k = im.entries.size(); k-- > 0;) {
    im.entries[k] = cfg.entry_min + static_cast<int>(index % base);
    index /= base;
  }
  return im;
}

IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols,
                        int entry_min, int entry_max) {
  IntMatrix im{rows, cols, std::vector<int>(rows * cols)};
  for (auto &v : im.entries) v = static_cast<int>(rng.uniform(entry_min, entry_max));
  return im;
}

IntMatrix planted_fp_matrix(Rng &rng, std::size_t rows, std::size_t cols,
                            int entry_min, int entry_max) {
  std::size_t limit = std::min<std::size_t>({rows, cols, 4});
  if (limit < 2) throw InputError("planting a pattern needs at least 2x2");
  int magnitude = std::max({std::abs(entry_min), std::abs(entry_max), 1});
  auto len = static_cast<std::size_t>(rng.uniform(2, static_cast<long long>(limit)));

  IntMatrix im = random_matrix(rng, rows, cols, entry_min, entry_max);
  std::vector<std::size_t> row_pool(rows), col_pool(cols);
  std::iota(row_pool.begin(), row_pool.end(), 0);
  std::iota(col_pool.begin(), col_pool.end(), 0);
  rng.shuffle(row_pool);
  rng.shuffle(col_pool);
  row_pool.resize(len);
  col_pool.resize(len);
  auto at = [&](std::size_t i, std::size_t j) -> int & { return im.entries[i * cols + j]; };
  for (std::size_t l = 0; l < len; ++l) {
    std::size_t j = col_pool[l];
    for (std::size_t i : row_pool) at(i, j) = 0;
    int sign = rng.coin() ? 1 : -1;
    at(row_pool[l], j) = sign * static_cast<int>(rng.uniform(1, magnitude));
    at(row_pool[(l + 1) % len], j) = -sign * static_cast<int>(rng.uniform(1, magnitude));
  }
  return im;
}

MatrixStream::MatrixStream(CampaignConfig cfg) : cfg_(std::move(cfg)) {
  validate(cfg_);
  total_ = cfg_.exhaustive ? exhaustive_count(cfg_) : cfg_.trials;
}

std::optional<CoeffMatrix> MatrixStream::next() {
  if (index_ >= total_) return std::nullopt;
  std::uint64_t k = index_++;
  if (cfg_.exhaustive) return exhaustive_matrix(cfg_, k).to_coeff();
  Rng rng = Rng::for_item(cfg_.seed, k);
  auto [m, n] = item_shape(cfg_, rng);
  return random_matrix(rng, m, n, cfg_.entry_min, cfg_.entry_max).to_coeff();
}

MatrixStream generate_matrices(const CampaignConfig &cfg) { return MatrixStream(cfg); }

std::size_t CampaignReport::failures() const noexcept {
  std::size_t total = 0;
  for (const auto &c : checks) total += c.failed;
  return total;
}

const CheckCount *CampaignReport::check(std::string_view name) const {
  for (const auto &c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CampaignReport run_campaign(Property property, const CampaignConfig &cfg) {
  validate(cfg);
  auto started = std::chrono::steady_clock::now();
  CampaignReport report;
  report.property = property;
  report.config = cfg;

  const bool sampled = !cfg.exhaustive;
  const std::uint64_t total = sampled ? cfg.trials * kMaxAttemptsPerTrial
                                      : exhaustive_count(cfg);
  const std::size_t workers = worker_count(cfg);
  const std::size_t batch = std::max<std::size_t>(64, 16 * workers);
  std::map<std::string, std::size_t> slot;
  bool done = sampled && cfg.trials == 0;

  for (std::uint64_t first = 0; first < total && !done; first += batch) {
    auto count = static_cast<std::size_t>(std::min<std::uint64_t>(batch, total - first));
    if (sampled)
      count = std::min<std::size_t>(count, std::max<std::size_t>(1, cfg.trials - report.accepted));
    auto outcomes = evaluate_batch(property, cfg, first, count, workers);
    for (auto &out : outcomes) {
      if (!out.counted) continue;
      ++report.evaluated;
      for (auto &r : out.results) {
        auto [it, inserted] = slot.emplace(r.name, report.checks.size());
        if (inserted) report.checks.push_back(CheckCount{r.name, 0, 0});
        auto &c = report.checks[it->second];
        if (r.ok) {
          ++c.passed;
        } else {
          ++c.failed;
          if (!report.counterexample) report.counterexample = std::move(r.counterexample);
        }
      }
      if (out.accepted) ++report.accepted;
      if ((report.counterexample && !cfg.keep_going) ||
          (sampled && report.accepted >= cfg.trials)) {
        done = true;
        break;
      }
    }
  }
  if (sampled && report.accepted < cfg.trials && !report.counterexample)
    throw CapabilityError(std::string(to_string(property)) + ": filter accepted only " +
                          std::to_string(report.accepted) + " of " +
                          std::to_string(report.evaluated) + " candidates");
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

nlohmann::json to_json(const CampaignConfig &cfg) {
  return {{"rows", cfg.rows},
          {"cols", cfg.cols},
          {"randomShape", cfg.random_shape},
          {"entryRange", {cfg.entry_min, cfg.entry_max}},
          {"dList", cfg.d_list},
          {"trials", cfg.trials},
          {"exhaustive", cfg.exhaustive},
          {"seed", cfg.seed},
          {"guard", cfg.guard},
          {"keepGoing", cfg.keep_going}};
}

nlohmann::json to_json(const CampaignReport &report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : report.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
  nlohmann::json cex = nullptr;
  if (report.counterexample) {
    const auto &c = *report.counterexample;
    cex = {{"check", c.check},
           {"matrix", io::to_json(c.matrix)},
           {"b", c.b ? io::vector_to_json(*c.b) : nlohmann::json(nullptr)},
           {"d", c.d ? nlohmann::json(*c.d) : nlohmann::json(nullptr)},
           {"detail", c.detail}};
  }
  return {{"property", to_string(report.property)},
          {"config", to_json(report.config)},
          {"evaluated", report.evaluated},
          {"accepted", report.accepted},
          {"checks", checks},
          {"failures", report.failures()},
          {"passed", report.passed()},
          {"counterexample", cex},
          {"runtimeMs", report.runtime_ms}};
}

} // namespace ilsconn::harness
