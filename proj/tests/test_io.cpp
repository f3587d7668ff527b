#include "doctest.h"
#include "groupwalk/errors.hpp"
#include "groupwalk/harmonic.hpp"
#include "groupwalk/io.hpp"

using namespace groupwalk;
using nlohmann::json;

TEST_CASE("rational measures round trip bit-exactly") {
  auto d4 = make_dihedral(4);
  RationalMeasure mu(d4, {{{0, 1}, rational(3, 8)}, {{1, 0}, rational(-5, 8)}, {{2, 0}, rational(1)}});
  json j = measure_to_json(mu);
  auto back = rational_measure_from_json(j);
  CHECK(back == mu);
  CHECK(measure_to_json(back).dump() == j.dump());

  auto lamp = make_lamplighter();
  RationalMeasure lm(lamp, {{{1, 0, 2}, rational(1, 3)}, {{0}, rational(2, 3)}});
  CHECK(rational_measure_from_json(measure_to_json(lm)) == lm);
}

TEST_CASE("real measures round trip") {
  auto z = make_zd(1);
  RealMeasure mu(z, {{{-1}, 0.5}, {{1}, 0.1234567890123456789}});
  auto back = real_measure_from_json(measure_to_json(mu));
  CHECK(back == mu);
}

TEST_CASE("malformed measures are named in errors") {
  json bad = json::parse(R"({
    "group": {"kind": "finite_abelian", "orders": [4]},
    "mode": "rational",
    "entries": [[[1], "1/2"], [[2], "3/0"]]
  })");
  CHECK_THROWS_WITH_AS(measure_from_json(bad), doctest::Contains("3/0"), ParseError);

  json bad_mode = bad;
  bad_mode["mode"] = "float";
  CHECK_THROWS_AS(measure_from_json(bad_mode), ParseError);

  json bad_element = json::parse(R"({
    "group": {"kind": "finite_abelian", "orders": [4]},
    "mode": "rational",
    "entries": [[[9], "1/2"]]
  })");
  CHECK_THROWS_WITH_AS(measure_from_json(bad_element), doctest::Contains("entry 0"), ParseError);
}

TEST_CASE("basis json lists rational strings in enumeration order") {
  auto z6 = make_finite_abelian({6});
  auto basis = harmonic_space(RationalProbability::uniform(z6, {{2}, {4}}));
  json j = basis_to_json(basis);
  CHECK(j["dimension"] == 2);
  CHECK(j["points"].size() == 6);
  CHECK(j["vectors"].size() == 2);
  CHECK(j["vectors"][0].size() == 6);
  for (const auto& v : j["vectors"])
    for (const auto& c : v) CHECK(c.is_string());
}

TEST_CASE("format_double renders shortest round trip") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1e-15) == "1e-15");
  double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
}
