#pragma once

#include "ilsconn/matrix.hpp"
#include "ilsconn/witness.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ilsconn::harness {

enum class Property {
  Thm1Witness,
  Thm2Connected,
  LemmaFpNoEo,
  LemmaShapeEquiv,
  GreedyOracle,
  Lemma5Canonical,
  Lemma6Path,
  PqSlack,
  TransformInvariance,
};

std::span<const Property> all_properties();
const char *to_string(Property p);
/// Throws InputError for unknown names.
Property parse_property(std::string_view name);

struct CampaignConfig {
  std::size_t rows = 3;
  std::size_t cols = 3;
  /// Draw each matrix's shape uniformly from [2, rows] x [2, cols].
  bool random_shape = false;
  int entry_min = -1;
  int entry_max = 1;
  std::vector<int> d_list{1};
  std::size_t trials = 100;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  std::uint64_t guard = kDefaultSearchGuard;
  bool keep_going = false;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

/// Throws InputError for unusable configurations.
void validate(const CampaignConfig &cfg);

/// mt19937_64 with unbiased bounded draws, so streams are identical across
/// standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Independent stream for work item `index` of a campaign seeded `seed`.
  static Rng for_item(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi);
  bool coin() { return uniform(0, 1) == 1; }
  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t k = v.size(); k > 1; --k)
      std::swap(v[k - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long long>(k) - 1))]);
  }

private:
  std::mt19937_64 engine_;
};

/// Integer matrix as produced by the generators.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> entries;

  CoeffMatrix to_coeff() const;
  SignPattern to_signs() const;
};

/// Number of matrices in the exhaustive enumeration of the configured shape.
std::uint64_t exhaustive_count(const CampaignConfig &cfg);
/// The `index`-th matrix in lexicographic order (first entry most
/// significant).
IntMatrix exhaustive_matrix(const CampaignConfig &cfg, std::uint64_t index);
/// Uniform entries in [entry_min, entry_max].
IntMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols,
                        int entry_min, int entry_max);
/// Random matrix with a planted sign cycle of size 2 to 4 (bounded by the
/// shape): random rows and columns, random signs and magnitudes in
/// [1, max(|entry_min|, |entry_max|)], zero elsewhere in the planted block
/// and uniform entries outside it.
IntMatrix planted_fp_matrix(Rng &rng, std::size_t rows, std::size_t cols,
                            int entry_min, int entry_max);

/// Deterministic matrix stream: exhaustive enumeration when configured,
/// else `trials` seeded uniform samples.
class MatrixStream {
public:
  explicit MatrixStream(CampaignConfig cfg);
  std::optional<CoeffMatrix> next();

private:
  CampaignConfig cfg_;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
};

MatrixStream generate_matrices(const CampaignConfig &cfg);

struct CheckCount {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  CoeffMatrix matrix;
  std::optional<RhsVector> b;
  std::optional<int> d;
  std::string check;
  std::string detail;
};

struct CampaignReport {
  Property property = Property::LemmaFpNoEo;
  CampaignConfig config;
  std::size_t evaluated = 0; // candidates generated and checked
  std::size_t accepted = 0;  // candidates passing the property's filter
  std::vector<CheckCount> checks;
  std::optional<Counterexample> counterexample;
  double runtime_ms = 0;

  bool passed() const noexcept { return !counterexample; }
  std::size_t failures() const noexcept;
  const CheckCount *check(std::string_view name) const;
};

/// Evaluates `property` over the configured matrices. Sampled campaigns run
/// until `trials` candidates pass the property's filter. Stops at the first
/// counterexample unless keep_going is set.
CampaignReport run_campaign(Property property, const CampaignConfig &cfg);

nlohmann::json to_json(const CampaignConfig &cfg);
nlohmann::json to_json(const CampaignReport &report);

} // namespace ilsconn::harness
