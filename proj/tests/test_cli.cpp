#include "mtf/io.hpp"

#include <doctest.h>

#include <cmath>

using namespace mtf;

TEST_CASE("format_number keeps a decimal point and round-trips") {
  CHECK(format_number(2.0) == "2.0");
  CHECK(format_number(0.0) == "0.0");
  CHECK(format_number(-0.0) == "0.0");
  CHECK(format_number(-0.5) == "-0.5");
  CHECK(format_number(1e300) == "1e+300");
  CHECK(format_number(kInf) == "inf");
  CHECK(format_number(-kInf) == "-inf");
  const double x = std::sqrt(2.0);
  CHECK(std::stod(format_number(x)) == x);
  CHECK(std::stod(format_number(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("number_to_json writes infinities as strings") {
  CHECK(number_to_json(1.5).is_number());
  CHECK(number_to_json(kInf) == "inf");
}

TEST_CASE("parse_csv_vector") {
  const Vector v = parse_csv_vector("3, -1.5,2e-1");
  REQUIRE(v.size() == 3);
  CHECK(v(0) == 3.0);
  CHECK(v(1) == -1.5);
  CHECK(v(2) == 0.2);
  CHECK_THROWS_AS(parse_csv_vector("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_csv_vector("1,x"), ValidationError);
  CHECK_THROWS_AS(parse_csv_vector(""), ValidationError);
}

TEST_CASE("scene parsing: all three set types, points as rows") {
  const Scene s = parse_scene(R"({
    "omega": {"type": "vpoly", "vertices": [[0, 0], [2, 0], [0, 1]]},
    "dynamics": {"type": "ball", "center": [0, 0], "radius": 2},
    "tol": 1e-6, "seed": 7})");
  REQUIRE(s.omega);
  REQUIRE(s.dynamics);
  const auto* v = s.omega->as<VPolytope>();
  REQUIRE(v);
  CHECK(v->vertices().rows() == 2);
  CHECK(v->vertices().cols() == 3);
  CHECK(v->vertices()(0, 1) == 2.0);
  CHECK(s.tol == 1e-6);
  CHECK(s.seed == 7);

  const Scene h = parse_scene(R"({"omega": {"type": "hpoly", "A": [[1, 0], [0, 1]], "b": [1, 2]}})");
  REQUIRE(h.omega->as<HPolyhedron>());
  CHECK(h.omega->as<HPolyhedron>()->b()(1) == 2.0);
  CHECK_FALSE(h.dynamics);
}

TEST_CASE("scene round trip through set_to_json") {
  const Scene s = parse_scene(R"({"omega": {"type": "vpoly", "vertices": [[0, 0], [2, 0]], "rays": [[0, 1]]}})");
  const nlohmann::json j = set_to_json(*s.omega);
  const ConvexSet back = parse_set(j);
  const auto* v = back.as<VPolytope>();
  REQUIRE(v);
  CHECK(v->rays().cols() == 1);
  CHECK(v->vertices().cols() == 2);
}

TEST_CASE("schema errors name the offending field") {
  auto field_of = [](const std::string& text) {
    try {
      parse_scene(text);
    } catch (const SchemaError& e) {
      return e.field();
    }
    return std::string("<no error>");
  };
  CHECK(field_of("{") == "");
  CHECK(field_of("[]") == "");
  CHECK(field_of(R"({"omega": {"type": "cube"}})") == "/omega/type");
  CHECK(field_of(R"({"omega": {"type": "hpoly", "A": [[1, 0], [0]], "b": [1, 1]}})") == "/omega/A/1");
  CHECK(field_of(R"({"omega": {"type": "hpoly", "A": [[1, 0]], "b": [1, 1]}})") == "/omega/b");
  CHECK(field_of(R"({"omega": {"type": "ball", "center": [0, 0]}})") == "/omega/radius");
  CHECK(field_of(R"({"omega": {"type": "ball", "center": [0, "a"], "radius": 1}})") == "/omega/center/1");
  // 0 is not interior to these dynamics.
  CHECK(field_of(R"({"dynamics": {"type": "hpoly", "A": [[1, 0], [-1, 0], [0, 1], [0, -1]], "b": [1, 0, 1, 1]}})") ==
        "/dynamics");
  CHECK(field_of(R"({"omega": {"type": "ball", "center": [0, 0, 0], "radius": 1},
                    "dynamics": {"type": "ball", "center": [0, 0], "radius": 1}})") == "/dynamics");
  CHECK(field_of(R"({"tol": -1})") == "/tol");
}
