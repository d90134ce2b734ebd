// Command-line front end. Every command prints JSON; indices are 1-based.
//
// Exit codes: 0 decided / property holds, 1 property failure, 2 guard or
// capability limit, 3 input error.

#include "ilsconn/elimination.hpp"
#include "ilsconn/errors.hpp"
#include "ilsconn/forbidden_pattern.hpp"
#include "ilsconn/harness.hpp"
#include "ilsconn/io.hpp"
#include "ilsconn/solution_graph.hpp"
#include "ilsconn/structure_4x3.hpp"
#include "ilsconn/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ilsconn;
using io::json;

constexpr int kExitFailure = 1;
constexpr int kExitCapability = 2;
constexpr int kExitInput = 3;

struct Options {
  std::string matrix_path;
  std::string b_path;
  std::string d_text = "1";
  std::string method = "auto";
  std::string from;
  std::string to;
  std::string property;
  std::string out_path;
  std::string entries = "-1..1";
  std::size_t rows = 3;
  std::size_t cols = 3;
  bool random_shape = false;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::size_t trials = 100;
  std::uint64_t guard = kDefaultSearchGuard;
  bool keep_going = false;
  std::size_t threads = 0;
};

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error &) {
      throw InputError("expected a comma-separated integer list, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

DomainBound single_d(const Options &o) {
  auto list = parse_int_list(o.d_text);
  if (list.size() != 1) throw InputError("--d takes a single value here");
  return DomainBound(list.front());
}

std::pair<int, int> parse_range(const std::string &text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("entry range must look like -2..2");
  auto lo = parse_int_list(text.substr(0, dots));
  auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1) throw InputError("bad entry range " + text);
  return {lo.front(), hi.front()};
}

CoeffMatrix load_matrix(const Options &o) {
  if (o.matrix_path.empty()) throw InputError("--matrix is required");
  return io::matrix_from_json(io::load_file(o.matrix_path));
}

RhsVector load_rhs(const Options &o) {
  if (o.b_path.empty()) throw InputError("--b is required");
  return io::vector_from_json(io::load_file(o.b_path));
}

void emit(const Options &o, const json &j) {
  if (o.out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(o.out_path);
  if (!out) throw InputError("cannot write " + o.out_path);
  out << j.dump(2) << '\n';
}

int cmd_analyze(const Options &o) {
  CoeffMatrix a = load_matrix(o);
  SignPattern sp = sign_pattern(a);
  json j;
  j["signPattern"] = io::to_json(sp);
  j["reduction"] = io::to_json(greedy_reduce(sp));
  auto eo = find_elimination_ordering(sp);
  j["eliminationOrdering"] = eo ? io::to_json(*eo) : json(nullptr);
  auto fp = find_minimal_pattern(sp);
  j["forbiddenPattern"] = fp ? io::to_json(*fp) : json(nullptr);
  j["complementClean"] = fp ? json(complement_is_clean(sp, *fp)) : json(nullptr);
  j["notEliminableAnywhere"] = not_eliminable_anywhere(sp);
  if (sp.cols() == 2) {
    auto pair = opposite_row_pair(sp);
    j["oppositeRowPair"] =
        pair ? json::array({pair->first + 1, pair->second + 1}) : json(nullptr);
  }
  if (sp.rows() == 4 && sp.cols() == 3) {
    auto match = match_canonical(sp);
    j["canonicalMatch"] = match ? io::to_json(*match) : json(nullptr);
  }
  emit(o, j);
  return 0;
}

int cmd_check(const Options &o) {
  CoeffMatrix a = load_matrix(o);
  emit(o, io::to_json(is_connected(a, load_rhs(o), single_d(o), o.guard)));
  return 0;
}

int cmd_witness(const Options &o) {
  CoeffMatrix a = load_matrix(o);
  DomainBound d = single_d(o);
  std::optional<Witness> w;
  if (o.method == "analytic" || o.method == "auto") w = analytic_witness(a, d);
  if (!w && (o.method == "search" || o.method == "auto"))
    w = search_witness(a, d, o.guard);
  emit(o, w ? io::to_json(*w) : json(nullptr));
  return 0;
}

int cmd_decide(const Options &o) {
  emit(o, io::to_json(decide_universal(load_matrix(o), single_d(o), o.guard)));
  return 0;
}

int cmd_canonical(const Options &o) {
  auto match = match_canonical(load_matrix(o));
  emit(o, match ? io::to_json(*match) : json(nullptr));
  return 0;
}

int cmd_path(const Options &o) {
  if (o.from.empty() || o.to.empty()) throw InputError("--from and --to are required");
  auto path = canonical_path(load_matrix(o), load_rhs(o), single_d(o),
                             io::parse_point(o.from), io::parse_point(o.to));
  emit(o, io::to_json(path));
  return 0;
}

int cmd_verify(const Options &o) {
  harness::CampaignConfig cfg;
  cfg.rows = o.rows;
  cfg.cols = o.cols;
  cfg.random_shape = o.random_shape;
  std::tie(cfg.entry_min, cfg.entry_max) = parse_range(o.entries);
  cfg.d_list = parse_int_list(o.d_text);
  cfg.trials = o.trials;
  cfg.exhaustive = o.exhaustive;
  cfg.seed = o.seed;
  cfg.guard = o.guard;
  cfg.keep_going = o.keep_going;
  cfg.threads = o.threads;
  auto report = harness::run_campaign(harness::parse_property(o.property), cfg);
  emit(o, harness::to_json(report));
  return report.passed() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Connectedness of solution graphs of integer linear systems"};
  app.require_subcommand(1);
  Options o;

  auto add_matrix = [&](CLI::App *c) {
    c->add_option("--matrix", o.matrix_path, "Matrix JSON file")->required();
  };
  auto add_common = [&](CLI::App *c) {
    c->add_option("--d", o.d_text, "Domain bound d (verify: comma list)");
    c->add_option("--guard", o.guard, "Search guard");
    c->add_option("--out", o.out_path, "Write JSON here instead of stdout");
  };

  auto *analyze = app.add_subcommand("analyze", "Sign structure: reduction, elimination ordering, forbidden pattern");
  add_matrix(analyze);
  add_common(analyze);

  auto *check = app.add_subcommand("check", "Connectivity of G(A, b)");
  add_matrix(check);
  add_common(check);
  check->add_option("--b", o.b_path, "Right-hand side JSON file")->required();

  auto *witness = app.add_subcommand("witness", "Disconnecting right-hand side");
  add_matrix(witness);
  add_common(witness);
  witness->add_option("--method", o.method, "analytic, search or auto")
      ->check(CLI::IsMember({"analytic", "search", "auto"}));

  auto *decide = app.add_subcommand("decide", "Universal connectedness for a fixed d");
  add_matrix(decide);
  add_common(decide);

  auto *canonical = app.add_subcommand("canonical", "Match the canonical 4x3 sign pattern");
  add_matrix(canonical);
  add_common(canonical);

  auto *path = app.add_subcommand("path", "Canonical 4x3 path between feasible points");
  add_matrix(path);
  add_common(path);
  path->add_option("--b", o.b_path, "Right-hand side JSON file")->required();
  path->add_option("--from", o.from, "Start point, e.g. 1,0,0")->required();
  path->add_option("--to", o.to, "End point")->required();

  auto *verify = app.add_subcommand("verify", "Run a property campaign");
  add_common(verify);
  std::vector<std::string> names;
  for (auto p : harness::all_properties()) names.emplace_back(harness::to_string(p));
  verify->add_option("property", o.property, "Property name")
      ->required()
      ->check(CLI::IsMember(names));
  verify->add_option("--rows", o.rows, "Rows (maximum with --random-shape)");
  verify->add_option("--cols", o.cols, "Columns (maximum with --random-shape)");
  verify->add_flag("--random-shape", o.random_shape, "Draw shapes from [2..rows]x[2..cols]");
  verify->add_option("--entries", o.entries, "Integer entry range, e.g. -2..2");
  verify->add_option("--seed", o.seed, "Seed");
  verify->add_flag("--exhaustive", o.exhaustive, "Enumerate every matrix");
  verify->add_option("--trials", o.trials, "Accepted samples to evaluate");
  verify->add_flag("--keep-going", o.keep_going, "Do not stop at the first counterexample");
  verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*check) return cmd_check(o);
    if (*witness) return cmd_witness(o);
    if (*decide) return cmd_decide(o);
    if (*canonical) return cmd_canonical(o);
    if (*path) return cmd_path(o);
    if (*verify) return cmd_verify(o);
  } catch (const CapabilityError &e) {
    std::cerr << "capability limit: " << e.what() << '\n';
    return kExitCapability;
  } catch (const InputError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DefectError &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}
