#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cyclift/corpus.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/json_io.hpp"

using namespace cyclift;
using io::Json;

TEST_CASE("dump formats doubles deterministically") {
  CHECK(io::dump(Json{{"spectrum", {-1.0, 1.0}}}) == R"({"spectrum":[-1.0,1.0]})");
  CHECK(io::dump(Json(0.0)) == "0.0");
  CHECK(io::dump(Json(-0.0)) == "0.0");
  CHECK(io::dump(Json(0.1)) == "0.10000000000000001");
  CHECK(io::dump(Json(1e300)) == "1.0000000000000001e+300");
  CHECK(io::dump(Json(std::numeric_limits<double>::quiet_NaN())) == "null");
  CHECK(io::dump(Json{{"a", 1}, {"b", "x"}}, 2) == "{\n  \"a\": 1,\n  \"b\": \"x\"\n}");
  CHECK(io::dump(Json::array()) == "[]");

  std::mt19937_64 rng(41);
  std::normal_distribution<double> nd(0.0, 1e3);
  for (int t = 0; t < 1000; ++t) {
    const double x = nd(rng);
    CHECK(io::parse(io::dump(Json(x))).get<double>() == x);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(io::parse("{"), ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("signature JSON") {
  const Graph tri = cycle_graph(3);  // {0,1},{1,2},{0,2}
  const CyclicSignature s(3, {1, 2, 0});
  const Json j = io::signature_to_json(tri, s);
  CHECK(io::dump(j) == R"({"k":3,"edges":[{"u":0,"v":1,"l":1},{"u":1,"v":2,"l":2},{"u":0,"v":2,"l":0}]})");
  CHECK(io::signature_from_json(j, tri) == s);

  SUBCASE("reverse orientation is normalised") {
    const Json rev = io::parse(R"({"k":3,"edges":[{"u":2,"v":0,"l":1},{"u":1,"v":0,"l":1},{"u":2,"v":1,"l":0}]})");
    CHECK(io::signature_from_json(rev, tri) == CyclicSignature(3, {2, 0, 2}));
  }
  SUBCASE("structural problems are parse errors") {
    CHECK_THROWS_AS(io::signature_from_json(io::parse(R"({"edges":[]})"), tri), ParseError);
    CHECK_THROWS_AS(io::signature_from_json(io::parse(R"({"k":3,"edges":{}})"), tri), ParseError);
    CHECK_THROWS_AS(io::signature_from_json(io::parse(R"({"k":3,"edges":[{"u":0,"v":1}]})"), tri), ParseError);
    CHECK_THROWS_AS(io::signature_from_json(io::parse(R"({"k":"3","edges":[]})"), tri), ParseError);
  }
  SUBCASE("contract violations are precondition errors") {
    CHECK_THROWS_AS(io::signature_from_json(io::parse(R"({"k":3,"edges":[{"u":0,"v":1,"l":1}]})"), tri),
                    PreconditionError);
    CHECK_THROWS_AS(
        io::signature_from_json(
            io::parse(R"({"k":3,"edges":[{"u":0,"v":1,"l":5},{"u":1,"v":2,"l":0},{"u":0,"v":2,"l":0}]})"), tri),
        PreconditionError);
    CHECK_THROWS_AS(
        io::signature_from_json(
            io::parse(R"({"k":3,"edges":[{"u":0,"v":1,"l":1},{"u":1,"v":0,"l":0},{"u":0,"v":2,"l":0}]})"), tri),
        PreconditionError);
    CHECK_THROWS_AS(
        io::signature_from_json(
            io::parse(R"({"k":3,"edges":[{"u":0,"v":1,"l":1},{"u":1,"v":2,"l":0},{"u":0,"v":3,"l":0}]})"), tri),
        PreconditionError);
  }
  SUBCASE("random round trips") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 50; ++t) {
      const Graph g = random_graph(rng, 2, 9, 0.5);
      const auto sig = random_signature(g, 2 + t % 6, rng);
      CHECK(io::signature_from_json(io::parse(io::dump(io::signature_to_json(g, sig))), g) == sig);
    }
  }
}

TEST_CASE("graph and polynomial JSON") {
  for (const auto& ng : default_corpus()) {
    CHECK(io::graph_from_json(io::parse(io::dump(io::graph_to_json(ng.graph)))) == ng.graph);
  }
  CHECK(io::dump(io::polynomial_to_json(Polynomial({0, -2, 0, 1}))) == R"({"coeffs":[0.0,-2.0,0.0,1.0]})");
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"n":2,"edges":[[0]]})")), ParseError);
  CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"n":2,"edges":[[0,0]]})")), PreconditionError);
}
