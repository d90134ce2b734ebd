#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

std::string tmp(const std::string &name) { return std::string(ILSCONN_TEST_TMP) + "/" + name; }

std::string write(const std::string &name, const std::string &content) {
  auto path = tmp(name);
  std::ofstream(path) << content;
  return path;
}

Result run(const std::string &args) {
  std::string cmd = std::string(ILSCONN_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string &args) {
  auto r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

const std::string kCycle2 = R"({"rows":2,"cols":2,"entries":[[1,1],[-1,-1]]})";
const std::string kCanonical =
    R"({"rows":4,"cols":3,"entries":[[1,1,0],[1,-1,0],[-1,0,1],[-1,0,-1]]})";

} // namespace

TEST_CASE("analyze") {
  auto m = write("cycle2.json", kCycle2);
  auto j = run_json("analyze --matrix " + m);
  CHECK(j["eliminationOrdering"].is_null());
  CHECK(j["forbiddenPattern"]["size"] == 2);
  CHECK(j["forbiddenPattern"]["rows"] == json::array({1, 2}));
  CHECK(j["complementClean"] == true);
  CHECK(j["oppositeRowPair"] == json::array({1, 2}));
}

TEST_CASE("check") {
  auto m = write("cycle2.json", kCycle2);
  auto b = write("b2.json", R"({"entries":[1,-1]})");
  auto j = run_json("check --matrix " + m + " --b " + b + " --d 1");
  CHECK(j["verdict"] == "disconnected");
  CHECK(j["componentCount"] == 2);
}

TEST_CASE("witness and decide") {
  auto m = write("cycle2.json", kCycle2);
  auto w = run_json("witness --matrix " + m + " --d 1");
  CHECK(w["b"]["entries"] == json::array({1, -1}));
  CHECK(w["pointP"] == json::array({1, 0}));
  CHECK(w["pointQ"] == json::array({0, 1}));
  CHECK(w["method"] == "analytic");

  auto s = run_json("witness --matrix " + m + " --d 1 --method search");
  CHECK(s["method"] == "search");

  auto c = write("canon.json", kCanonical);
  auto v = run_json("decide --matrix " + c + " --d 1");
  CHECK(v["verdict"] == "universallyConnected");
  CHECK(v["witness"].is_null());
  auto none = run("witness --matrix " + c + " --d 1 --method search");
  CHECK(none.code == 0);
  CHECK(json::parse(none.out).is_null());
}

TEST_CASE("canonical and path") {
  auto c = write("canon.json", kCanonical);
  auto j = run_json("canonical --matrix " + c);
  CHECK(j["rowPerm"] == json::array({1, 2, 3, 4}));
  auto b = write("b4.json", "[-10,-10,-10,-10]");
  auto p = run_json("path --matrix " + c + " --b " + b + " --d 1 --from 1,0,0 --to 0,1,1");
  CHECK(p["points"] == json::parse("[[1,0,0],[1,1,0],[0,1,0],[0,1,1]]"));
}

TEST_CASE("verify") {
  auto j = run_json("verify greedy-oracle --rows 2 --cols 2 --exhaustive");
  CHECK(j["passed"] == true);
  CHECK(j["evaluated"] == 81);
  auto t = run_json("verify thm1-witness --rows 3 --cols 3 --trials 20 --entries=-2..2 --d 1,2");
  CHECK(t["passed"] == true);
  CHECK(t["accepted"] == 20);
}

TEST_CASE("out file") {
  auto m = write("cycle2.json", kCycle2);
  auto o = tmp("analyze_out.json");
  auto r = run("analyze --matrix " + m + " --out " + o);
  CHECK(r.code == 0);
  std::ifstream in(o);
  CHECK(json::parse(in)["forbiddenPattern"]["size"] == 2);
}

TEST_CASE("exit codes") {
  auto c = write("canon.json", kCanonical);
  CHECK(run("decide --matrix " + c + " --d 1 --guard 3").code == 2);
  CHECK(run("decide --matrix " + tmp("missing.json") + " --d 1").code == 3);
  auto bad = write("bad.json", R"({"entries":[[0.5,1]]})");
  CHECK(run("analyze --matrix " + bad).code == 3);
  auto ragged = write("ragged.json", R"({"entries":[[1,2],[3]]})");
  CHECK(run("analyze --matrix " + ragged).code == 3);
  CHECK(run("decide --matrix " + c + " --d 0").code == 3);
  CHECK(run("verify no-such-property").code == 3);
  CHECK(run("frobnicate").code == 3);
  auto b = write("b4pos.json", "[5,5,5,5]");
  CHECK(run("path --matrix " + c + " --b " + b + " --d 1 --from 0,0,0 --to 1,1,1").code == 3);
}
