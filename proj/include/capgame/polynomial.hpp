#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capgame/rational.hpp"

namespace capgame {

/// Dense univariate polynomial over Q, coefficients in ascending order,
/// trailing zeros stripped (the zero polynomial has no coefficients).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of z^k, zero past the degree.
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& z) const;

  /// q(t) = p(c + t).
  Polynomial shifted(const Rational& c) const;
  /// t^n p(1/t) for n >= degree.
  Polynomial reversed(std::size_t n) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; throws Error(precondition) on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::vector<std::string> to_strings() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// First n+1 coefficients of the power series num/den at t = 0. den(0) must be nonzero.
std::vector<Rational> series_quotient(const Polynomial& num, const Polynomial& den, std::size_t n);

}  // namespace capgame
