#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace capgame {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-7", "0.125" or "1.5e-3". Result is exact and canonical.
/// Throws Error(parse) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// log|r| for r != 0, accurate for numerators and denominators far beyond double range.
double log_abs(const Rational& r);
double log_abs(const Integer& n);

bool is_prime(long n);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& r, long p);

/// Primes dividing the numerator or denominator of r (r != 0), ascending.
std::vector<long> prime_support(const Rational& r);

/// Best continued-fraction convergent of x with denominator <= max_denominator.
/// x must be finite.
Rational rationalize(double x, const Integer& max_denominator);

/// Value in R or +infinity. Used for matrix entries where +infinity is a
/// genuine value, never a sentinel large number.
template <class T>
class Extended {
public:
  Extended() = default;
  Extended(T v) : value_(std::move(v)) {}  // NOLINT: implicit from finite values

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; unspecified for infinity.
  const T& value() const noexcept { return value_; }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(T(a.value_ + b.value_));
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

private:
  T value_{};
  bool infinite_ = false;
};

using ExtendedReal = Extended<double>;
using ExtendedRational = Extended<Rational>;

}  // namespace capgame
