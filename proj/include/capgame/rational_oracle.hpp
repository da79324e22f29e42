#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "capgame/polynomial.hpp"
#include "capgame/points.hpp"

namespace capgame {

/// p/q in lowest terms with q monic (leading coefficient 1). The zero function is 0/1.
class RationalFunction {
public:
  /// Cancels the gcd and normalizes; throws Error(precondition) if den == 0.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  /// max(deg p, deg q).
  long degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  Polynomial num_;
  Polynomial den_;
};

/// D_n = det(c_{i+j})_{0<=i,j<=n} for n = 0..max_order. Needs coefficients up to
/// c_{2 max_order}.
std::vector<Rational> hankel_profile(const LocalSeries& series, std::size_t max_order);

/// [d_num/d_den] Pade approximant at the series' base point (local parameter t),
/// returned only if its expansion reproduces every supplied coefficient.
std::optional<RationalFunction> pade(const LocalSeries& series, std::size_t d_num, std::size_t d_den);

/// Rational function in the global coordinate z with numerator and denominator
/// degree <= d whose expansion at every point matches the given jet. Solves the
/// homogeneous jet-matching system, then re-expands the candidate at every point;
/// returns nullopt unless that verification passes.
/// Throws Error(precondition) if sum_i (order_i + 1) < 2d + 2.
std::optional<RationalFunction> multipoint_reconstruct(std::span<const MarkedPoint> points,
                                                       std::span<const LocalSeries> jets, std::size_t d);

struct OracleResult {
  std::optional<RationalFunction> function;
  std::optional<std::size_t> degree;    ///< degree bound at which it was found
  std::size_t search_cap = 0;           ///< largest degree tried
  std::map<PointId, long> verified_orders;
};

/// Largest d with sum_i (order_i + 1) >= 2d + 2.
std::size_t degree_search_cap(std::span<const LocalSeries> jets);

/// Tries d = 0, 1, ... up to min(cap, degree_search_cap) and stops at the first
/// verified reconstruction.
OracleResult search_rational(std::span<const MarkedPoint> points, std::span<const LocalSeries> jets,
                             std::optional<std::size_t> cap = std::nullopt);

}  // namespace capgame
