#include <doctest.h>

#include <cmath>
#include <random>

#include "capgame/error.hpp"
#include "capgame/game.hpp"
#include "support.hpp"

using namespace capgame;
using capgame::testing::finite_game;
using capgame::testing::q;
using capgame::testing::qs;

namespace {

const ExtendedRational kInf = ExtendedRational::infinity();

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool nonneg_off_diagonal = false) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = testing::random_rational(rng, 20, 6);
      if (nonneg_off_diagonal && i != j) m[i][j] = abs(m[i][j]);
    }
  return m;
}

}  // namespace

TEST_CASE("payoff_floor: basic cases") {
  CHECK(payoff_floor(finite_game({{q("1")}}), Strategy::pure(1, 0)) == ExtendedRational(q("1")));
  CHECK(payoff_floor(finite_game({{q("0"), q("1")}, {q("1"), q("0")}}), Strategy::uniform(2)) ==
        ExtendedRational(q("1/2")));
  const RationalGameMatrix cut{{q("0"), kInf}, {kInf, q("0")}};
  CHECK(payoff_floor(cut, Strategy::uniform(2)).is_infinite());
  // 0 * inf = 0
  CHECK(payoff_floor(cut, Strategy::pure(2, 0)) == ExtendedRational(q("0")));
}

TEST_CASE("Strategy invariants") {
  CHECK_THROWS_AS(Strategy(qs({"1/2", "1/3"})), Error);
  CHECK_THROWS_AS(Strategy(qs({"3/2", "-1/2"})), Error);
  CHECK(Strategy::uniform(3).weights() == qs({"1/3", "1/3", "1/3"}));
}

TEST_CASE("game_value: basic cases") {
  {
    const GameValueResult r = game_value(make_game_matrix({{std::log(2.0)}}));
    CHECK(r.value_real() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(r.x_star == Strategy::pure(1, 0));
    REQUIRE(r.y_star);
    CHECK(*r.y_star == Strategy::pure(1, 0));
  }
  {
    const GameValueResult r = game_value(finite_game({{q("0"), q("1")}, {q("1"), q("0")}}));
    CHECK(r.value == ExtendedRational(q("1/2")));
    CHECK(r.x_star == Strategy::uniform(2));
    CHECK(*r.y_star == Strategy::uniform(2));
    CHECK(r.margin() == MarginFlag::ok);
  }
  {
    const GameValueResult r = game_value(RationalGameMatrix{{q("0"), kInf}, {kInf, q("0")}});
    CHECK(r.value.is_infinite());
    CHECK_FALSE(r.y_star);
    CHECK(payoff_floor(RationalGameMatrix{{q("0"), kInf}, {kInf, q("0")}}, r.x_star).is_infinite());
  }
  CHECK(game_value(finite_game({{q("0")}})).margin() == MarginFlag::marginal);
}

TEST_CASE("game_value: partially infinite matrices settle to a finite value") {
  // sup over x of min(x_2, inf * x_1) = 1 is approached, not attained.
  const RationalGameMatrix g{{q("0"), kInf}, {q("1"), q("0")}};
  const GameValueResult r = game_value(g);
  REQUIRE(r.value.is_finite());
  CHECK(r.value_real() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.cap_doublings > 0);
  const auto floor = payoff_floor(g, r.x_star);
  CHECK(floor.value().get_d() >= r.value_real() - 1e-9);

  // A row that is infinite where it matters: column 0 has no infinity and bounds the value.
  const RationalGameMatrix h{{q("2"), kInf, kInf}, {q("-1"), q("0"), kInf}, {q("3"), q("1"), q("-2")}};
  const GameValueResult s = game_value(h);
  REQUIRE(s.value.is_finite());
  CHECK(payoff_floor(h, s.x_star).value().get_d() >= s.value_real() - 1e-9);
  CHECK(s.value_real() <= 3 + 1e-9);
}

TEST_CASE("game_value agrees with kernel enumeration on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const RationalMatrix m = random_matrix(rng, n);
    const GameValueResult r = game_value(finite_game(m));
    CHECK(r.value.value() == testing::kernel_game_value(m));
    CHECK(payoff_floor(finite_game(m), r.x_star) == r.value);
    for (const auto& c : r.certificate) CHECK(c >= r.value);
  }
}

TEST_CASE("minimax_check: examples and random matrices") {
  CHECK(minimax_check(finite_game({{q("0"), q("1")}, {q("1"), q("0")}})));
  CHECK(minimax_check(finite_game({{q("5")}})));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = finite_game(random_matrix(rng, 4));
    const MinimaxValues v = minimax_values(m);
    CHECK(v.sup_inf == v.inf_sup);
  }
  CHECK_THROWS_AS(minimax_values(RationalGameMatrix{{q("0"), kInf}, {kInf, q("0")}}), Error);
}

TEST_CASE("game_value: monotonicity, diagonal-free shift and single-point bounds") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const RationalMatrix m = random_matrix(rng, n, true);
    RationalMatrix bigger = m, shifted = m;
    for (auto& row : bigger)
      for (auto& v : row) v += abs(testing::random_rational(rng, 3, 4));
    const Rational c = testing::random_rational(rng, 5, 3);
    for (auto& row : shifted)
      for (auto& v : row) v += c;
    const GameValueResult r = game_value(finite_game(m));
    CHECK(r.value <= game_value(finite_game(bigger)).value);
    const GameValueResult s = game_value(finite_game(shifted));
    CHECK(s.value.value() == r.value.value() + c);
    CHECK(payoff_floor(finite_game(shifted), r.x_star) == s.value);
    // Playing the pure row i earns at least min_j G_ij; with nonnegative off-diagonal
    // entries that is min(G_ii, 0).
    for (std::size_t i = 0; i < n; ++i) CHECK(r.value.value() >= std::min(m[i][i], Rational(0)));
  }
}

TEST_CASE("game_value can fall below the largest diagonal entry") {
  // Nonnegative off-diagonal entries do not make the pure row optimal.
  const GameValueResult r = game_value(finite_game({{q("1"), q("0")}, {q("0"), q("1")}}));
  CHECK(r.value == ExtendedRational(q("1/2")));
  CHECK(r.value.value() < 1);
}

TEST_CASE("rational_strategy: basic cases") {
  {
    const auto g = rationalize(make_game_matrix({{std::log(2.0)}}));
    CHECK(rational_strategy(g, q("1/2")) == Strategy::pure(1, 0));
  }
  CHECK(rational_strategy(finite_game({{q("0"), q("1")}, {q("1"), q("0")}}), q("1/4")) == Strategy::uniform(2));
  CHECK(rational_strategy(RationalGameMatrix{{q("0"), kInf}, {kInf, q("0")}}, q("100")) == Strategy::uniform(2));
  CHECK_THROWS_AS(rational_strategy(finite_game({{q("0"), q("1")}, {q("1"), q("0")}}), q("1/2")), Error);
}

TEST_CASE("rational_strategy: strictly positive and strictly above V' on random games") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = finite_game(random_matrix(rng, 1 + trial % 5));
    const Rational v = game_value(g).value.value();
    if (v <= 0) continue;
    const Strategy a = rational_strategy(g, v / 2);
    for (const auto& w : a.weights()) CHECK(w > 0);
    for (const auto& c : column_payoffs(g, a)) CHECK(c > ExtendedRational(Rational(v / 2)));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("rationalize keeps infinities and approximates finite entries") {
  const GameMatrix g = make_game_matrix({{std::log(2.0), ExtendedReal::infinity()}, {ExtendedReal::infinity(), 0.25}});
  const RationalGameMatrix r = rationalize(g);
  CHECK(r[0][1].is_infinite());
  CHECK(r[1][1] == ExtendedRational(q("1/4")));
  CHECK(std::abs(r[0][0].value().get_d() - std::log(2.0)) < 1e-15);
}
