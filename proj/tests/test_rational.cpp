#include <doctest.h>

#include <cmath>

#include "capgame/error.hpp"
#include "capgame/linalg.hpp"
#include "capgame/polynomial.hpp"
#include "support.hpp"

using namespace capgame;
using capgame::testing::q;

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(q("-7") == Rational(-7));
  CHECK(q("0.125") == Rational(1, 8));
  CHECK(q("1.5e-3") == Rational(3, 2000));
  CHECK(q(" -2/-4 ") == Rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("5")) == "5");
}

TEST_CASE("p-adic valuations and prime support") {
  CHECK(valuation(q("3/2"), 2) == -1);
  CHECK(valuation(q("3/2"), 3) == 1);
  CHECK(valuation(q("-5/6"), 5) == 1);
  CHECK(valuation(q("48"), 2) == 4);
  CHECK(prime_support(q("-5/6")) == std::vector<long>{2, 3, 5});
  CHECK(prime_support(q("1")).empty());
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("log_abs handles values beyond double range") {
  CHECK(log_abs(q("3/2")) == doctest::Approx(std::log(1.5)));
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  CHECK(log_abs(Rational(big)) == doctest::Approx(400 * std::log(10.0)));
}

TEST_CASE("rationalize returns the best bounded convergent") {
  CHECK(rationalize(0.5, Integer(1000)) == Rational(1, 2));
  CHECK(rationalize(3.14159265358979, Integer(1000)) == Rational(355, 113));
  CHECK(rationalize(-0.25, Integer(10)) == Rational(-1, 4));
  const Rational l2 = rationalize(std::log(2.0), Integer("1000000000000"));
  CHECK(std::abs(l2.get_d() - std::log(2.0)) < 1e-20 + 1e-15);
  CHECK(l2.get_den() <= Integer("1000000000000"));
}

TEST_CASE("polynomial arithmetic, shift and gcd") {
  const Polynomial p{q("1"), q("-2")};  // 1 - 2z
  CHECK(p.degree() == 1);
  CHECK(p(q("1/2")) == 0);
  CHECK(p.shifted(q("1")) == Polynomial{q("-1"), q("-2")});
  CHECK(p.reversed(1) == Polynomial{q("-2"), q("1")});
  const Polynomial a = p * Polynomial{q("0"), q("1")};
  const Polynomial b = p * Polynomial{q("3"), q("1")};
  CHECK(Polynomial::gcd(a, b) == p.monic());
  auto [quot, rem] = Polynomial::divmod(b, p);
  CHECK(rem.is_zero());
  CHECK(quot == Polynomial{q("3"), q("1")});
  CHECK(Polynomial().degree() == -1);
  CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial{}), Error);
}

TEST_CASE("series quotient is the inverse of multiplication") {
  const Polynomial num{q("1"), q("3")}, den{q("2"), q("-1"), q("5")};
  const auto s = series_quotient(num, den, 8);
  const Polynomial prod = den * Polynomial(s);
  for (std::size_t k = 0; k <= 8; ++k) CHECK(prod.coefficient(k) == num.coefficient(k));
}

TEST_CASE("exact linear algebra") {
  RationalMatrix m{{q("1"), q("2")}, {q("2"), q("4")}};
  CHECK(determinant(m) == 0);
  CHECK(rank(m) == 1);
  const auto ns = nullspace(m, 2);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + 2 * ns[0][1] == 0);
  CHECK(determinant({{q("0"), q("1")}, {q("1"), q("0")}}) == -1);
  CHECK(nullspace({}, 3).size() == 3);
}
