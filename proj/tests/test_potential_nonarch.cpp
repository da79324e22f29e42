#include <doctest.h>

#include <cmath>

#include "capgame/error.hpp"
#include "capgame/potential_nonarch.hpp"
#include "support.hpp"

using namespace capgame;
using capgame::testing::q;

TEST_CASE("size_preset: basic cases") {
  CHECK(size_preset(SizePreset::good_reduction, 7) == 0);
  CHECK(size_preset(SizePreset::leaf, 2) == -1);
  CHECK(size_preset(SizePreset::leaf_p_curvature, 3) == q("-1/6"));
  CHECK(size_preset(SizePreset::leaf, 5) == q("-1/4"));
  CHECK_THROWS_AS(size_preset(SizePreset::leaf, 6), Error);
  CHECK(parse_size_preset("leaf_p_curvature") == SizePreset::leaf_p_curvature);
  CHECK(to_string(SizePreset::good_reduction) == "good_reduction");
  CHECK_THROWS_AS(parse_size_preset("bad"), Error);
}

TEST_CASE("nonarch_matrix: basic cases") {
  const std::vector<MarkedPoint> one{{0, Coordinate(q("0"))}};
  {
    const NonArchMatrix m = nonarch_matrix(NonArchPlace{2, {{0, q("0")}}, {}, {}}, one, {{0, q("1")}});
    CHECK(m.prime == 2);
    CHECK(m.coeffs == std::vector<std::vector<Rational>>{{q("0")}});
  }
  {
    // v_2(3/2) = -1: the entry is -log 2.
    const NonArchMatrix m = nonarch_matrix(NonArchPlace{2, {{0, q("0")}}, {}, {}}, one, {{0, q("3/2")}});
    CHECK(m.coeffs[0][0] == -1);
    CHECK(m.coeffs[0][0].get_d() * std::log(2.0) == doctest::Approx(-std::log(2.0)));
  }
  {
    const NonArchMatrix m = nonarch_matrix(NonArchPlace{3, {{0, q("-1/2")}}, {}, {}}, one, {});
    CHECK(m.coeffs[0][0] == q("-1/2"));
  }
}

TEST_CASE("nonarch_matrix: presets, off-diagonal data and zero defaults") {
  const std::vector<MarkedPoint> pts{{1, Coordinate(q("0"))}, {2, Coordinate(q("1"))}, {3, Coordinate::infinity()}};
  NonArchPlace place{5, {{1, q("-1")}}, {{2, SizePreset::leaf}}, {{{1, 3}, q("2/3")}}};
  const NonArchMatrix m = nonarch_matrix(place, pts, {});
  CHECK(m.coeffs[0][0] == -1);
  CHECK(m.coeffs[1][1] == q("-1/4"));
  CHECK(m.coeffs[2][2] == 0);
  CHECK(m.coeffs[0][2] == q("2/3"));
  CHECK(m.coeffs[0][1] == 0);

  const NonArchMatrix good = nonarch_matrix(NonArchPlace{7, {}, {}, {}}, pts, {});
  for (const auto& row : good.coeffs)
    for (const auto& c : row) CHECK(c == 0);
}

TEST_CASE("validate_place rejects invalid data") {
  CHECK_THROWS_AS(validate_place(NonArchPlace{4, {}, {}, {}}), Error);
  CHECK_THROWS_AS(validate_place(NonArchPlace{3, {{0, q("1/2")}}, {}, {}}), Error);
  CHECK_THROWS_AS(validate_place(NonArchPlace{3, {}, {}, {{{0, 1}, q("-1")}}}), Error);
  CHECK_THROWS_AS(validate_place(NonArchPlace{3, {{0, q("-1")}}, {{0, SizePreset::leaf}}, {}}), Error);
  CHECK_NOTHROW(validate_place(NonArchPlace{3, {{0, q("-1")}}, {{1, SizePreset::leaf}}, {}}));
}

TEST_CASE("a_analyticity_check: basic cases") {
  const std::vector<MarkedPoint> pts{{0, Coordinate(q("0"))}};
  {
    const auto r = a_analyticity_check({}, pts);
    CHECK(r.verdict);
    CHECK(r.log_size_totals.at(0).is_zero());
  }
  {
    const std::vector<NonArchPlace> places{NonArchPlace{2, {{0, q("-1")}}, {}, {}}};
    const auto r = a_analyticity_check(places, pts);
    CHECK(r.verdict);
    CHECK(r.log_size_totals.at(0) == LogCombination(2, q("-1")));
    CHECK(r.log_size_totals.at(0).to_double() == doctest::Approx(-std::log(2.0)));
  }
  CHECK_FALSE(a_analyticity_check({}, pts, true).verdict);
}

TEST_CASE("LogCombination keeps exact coefficients and drops zeros") {
  LogCombination c(2, q("1/2"));
  c.add(3, q("-1"));
  c.add(2, q("-1/2"));
  CHECK(c.terms().size() == 1);
  CHECK(c.terms().at(3) == -1);
  CHECK(c.to_double() == doctest::Approx(-std::log(3.0)));
}
