#include <doctest.h>

#include "radlie/algebra_file.hpp"

using namespace radlie;
using nlohmann::json;

namespace {
json e12_file() {
  return json::parse(R"({"ambient_dim": 2,
    "generators": [{"name": "a", "matrix": [[[0,0],[1,0]],[[0,0],[0,0]]]},
                   {"name": "b", "matrix": [[[1,0],[0,0]],[[0,0],[0,-2]]]}]})");
}
}  // namespace

TEST_CASE("parses generators and complex entries") {
  const AlgebraFile f = parse_algebra_file(e12_file());
  CHECK(f.ambient_dim == 2);
  REQUIRE(f.generators.size() == 2);
  CHECK(f.element("a")(0, 1) == Complex(1.0, 0.0));
  CHECK(f.element("b")(1, 1) == Complex(0.0, -2.0));
  CHECK_FALSE(f.has_lie_basis);
  CHECK_THROWS_AS(f.element("zzz"), InputError);
}

TEST_CASE("lie basis by name or inline") {
  json j = e12_file();
  j["lie_basis"] = json::array({"a", json::parse("[[[1,0],[0,0]],[[0,0],[0,0]]]")});
  const AlgebraFile f = parse_algebra_file(j);
  CHECK(f.has_lie_basis);
  REQUIRE(f.lie_basis.size() == 2);
  CHECK(f.lie_basis[1](0, 0) == Complex(1.0, 0.0));
}

TEST_CASE("rejects malformed input") {
  json j = e12_file();
  j["generators"][1]["name"] = "a";
  CHECK_THROWS_AS(parse_algebra_file(j), InputError);
  j = e12_file();
  j["generators"][0]["matrix"] = json::parse("[[[0,0],[1,0]]]");
  CHECK_THROWS_AS(parse_algebra_file(j), InputError);
  j = e12_file();
  j["generators"][0]["matrix"][0][0] = json::array({1});
  CHECK_THROWS_AS(parse_algebra_file(j), InputError);
  j = e12_file();
  j.erase("ambient_dim");
  CHECK_THROWS_AS(parse_algebra_file(j), InputError);
  j = e12_file();
  j["lie_basis"] = json::array({"nope"});
  CHECK_THROWS_AS(parse_algebra_file(j), InputError);
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("matrix JSON round trip") {
  Matrix m(2, 2);
  m << Complex(1, 2), Complex(-3, 0.5), Complex(0, 0), Complex(1e-300, -7);
  CHECK(matrix_from_json(matrix_to_json(m), 2) == m);
}
