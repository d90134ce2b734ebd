#include "common.hpp"

#include "ilsconn/errors.hpp"
#include "ilsconn/io.hpp"

#include <doctest.h>

#include <fstream>

using namespace ilsconn;
using nlohmann::json;
using testing::B;
using testing::M;
using testing::Q;

TEST_CASE("rational values in JSON") {
  CHECK(io::rational_from_json(json(3)) == 3);
  CHECK(io::rational_from_json(json(-4)) == -4);
  CHECK(io::rational_from_json(json("7/3")) == Rational(7, 3));
  CHECK(io::rational_from_json(json("-3.25")) == Rational(-13, 4));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), InputError);
  CHECK_THROWS_AS(io::rational_from_json(json(true)), InputError);
  CHECK_THROWS_AS(io::rational_from_json(json("x")), InputError);
  CHECK(io::to_json(Rational(5)) == json(5));
  CHECK(io::to_json(Rational(-1, 2)) == json("-1/2"));
}

TEST_CASE("matrix document") {
  auto doc = json::parse(R"({"rows":2,"cols":2,"entries":[[1,"-1/2"],[0,"2.5"]]})");
  auto a = io::matrix_from_json(doc);
  CHECK(a == Q({{"1", "-1/2"}, {"0", "5/2"}}));
  auto back = io::to_json(a);
  CHECK(back["rows"] == 2);
  CHECK(back["entries"][0][1] == "-1/2");
  CHECK(io::matrix_from_json(back) == a);

  CHECK(io::matrix_from_json(json::parse(R"({"entries":[[1,2]]})")) == M({{1, 2}}));
}

TEST_CASE("matrix document errors") {
  for (const char *text : {R"({"entries":[[1,2],[3]]})", R"({"rows":3,"entries":[[1]]})",
                           R"({"cols":2,"entries":[[1]]})", R"({"entries":[]})",
                           R"({"entries":[[1.5]]})", R"([[1,2]])", R"({"entries":7})"})
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(text)), InputError);
}

TEST_CASE("vectors and points") {
  CHECK(io::vector_from_json(json::parse(R"({"entries":[1,"1/3"]})")) ==
        RhsVector{Rational(1), Rational(1, 3)});
  CHECK(io::vector_from_json(json::parse("[0,-2]")) == B({0, -2}));
  CHECK(io::vector_to_json(B({1, 2}))["entries"] == json::array({1, 2}));
  CHECK(io::parse_point("1,0,2") == Point{1, 0, 2});
  CHECK(io::parse_point("[0, 1]") == Point{0, 1});
  CHECK_THROWS_AS(io::parse_point("1,,2"), InputError);
  CHECK_THROWS_AS(io::point_from_json(json::parse("[0.5]")), InputError);
}

TEST_CASE("patterns use one-based indices") {
  ForbiddenPattern fp{{0, 2}, {1, 0}};
  auto j = io::to_json(fp);
  CHECK(j["size"] == 2);
  CHECK(j["rows"] == json::array({1, 3}));
  CHECK(j["cols"] == json::array({2, 1}));
  CHECK(io::pattern_from_json(j) == fp);
  CHECK_THROWS_AS(io::pattern_from_json(json::parse(R"({"rows":[0],"cols":[1]})")),
                  InputError);
}

TEST_CASE("report serialization") {
  auto r = components({{0, 0, 0}, {1, 1, 1}});
  auto j = io::to_json(r);
  CHECK(j["verdict"] == "disconnected");
  CHECK(j["connected"] == false);
  CHECK(j["feasibleCount"] == 2);
  CHECK(j["componentLabel"] == json::array({1, 2}));
  CHECK(j["certificate"][1] == json::array({1, 1, 1}));

  Witness w{B({1, -1}), {1, 0}, {0, 1}, WitnessMethod::Analytic};
  auto jw = io::to_json(w);
  CHECK(jw["b"]["entries"] == json::array({1, -1}));
  CHECK(jw["method"] == "analytic");

  auto jr = io::to_json(ReductionResult{{1}, {0, 2}});
  CHECK(jr["eliminated"] == json::array({2}));
  CHECK(jr["residual"] == json::array({1, 3}));
}

TEST_CASE("load_file") {
  const std::string path = "io_test_matrix.json";
  {
    std::ofstream out(path);
    out << R"({"entries":[[1,1],[-1,-1]]})";
  }
  CHECK(io::matrix_from_json(io::load_file(path)) == M({{1, 1}, {-1, -1}}));
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(io::load_file(path), InputError);
  CHECK_THROWS_AS(io::load_file("does/not/exist.json"), InputError);
  std::remove(path.c_str());
}
