#pragma once

#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "capgame/points.hpp"

namespace capgame {

enum class SizePreset { good_reduction, leaf, leaf_p_curvature };

std::string_view to_string(SizePreset preset);
SizePreset parse_size_preset(std::string_view text);

/// Exact real number sum_p coeff_p * log p.
class LogCombination {
public:
  LogCombination() = default;
  LogCombination(long prime, const Rational& coeff) { add(prime, coeff); }

  void add(long prime, const Rational& coeff);
  const std::map<long, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  double to_double() const;

  friend bool operator==(const LogCombination&, const LogCombination&) = default;

private:
  std::map<long, Rational> terms_;  // zero coefficients are never stored
};

/// One prime's contribution: per-point size exponents q_i (size p^{q_i}) and
/// optional off-diagonal entries, both as multiples of log p.
struct NonArchPlace {
  long prime = 2;
  std::map<PointId, Rational> log_size_coeffs;
  std::map<PointId, SizePreset> presets;
  std::map<std::pair<PointId, PointId>, Rational> off_diagonal;

  /// q_i from the preset or explicit coefficient; 0 when the point is absent.
  Rational log_size_coeff(PointId point) const;

  friend bool operator==(const NonArchPlace&, const NonArchPlace&) = default;
};

/// Throws Error(precondition) unless p is prime, all q_i <= 0, off-diagonal
/// coefficients are >= 0, and no point carries both a preset and an explicit size.
void validate_place(const NonArchPlace& place);

/// good_reduction -> 0, leaf -> -1/(p-1), leaf_p_curvature -> -1/(p(p-1)).
Rational size_preset(SizePreset kind, long p);

/// Coefficients c_ij of the place matrix c_ij * log p, in `points` order.
/// Diagonal: q_i + v_p(a_i) (that is, q_i log p - log|a_i|_p).
struct NonArchMatrix {
  long prime = 2;
  std::vector<std::vector<Rational>> coeffs;
};

NonArchMatrix nonarch_matrix(const NonArchPlace& place, std::span<const MarkedPoint> points,
                             const std::vector<TangentScaling>& scalings);

struct AnalyticityReport {
  std::map<PointId, LogCombination> log_size_totals;  ///< sum over places of q_{i,v} log p_v
  bool verdict = true;
};

/// Sums the per-point log sizes over finitely many places. The verdict is false
/// only when the input declares an infinite tail of places.
AnalyticityReport a_analyticity_check(std::span<const NonArchPlace> places, std::span<const MarkedPoint> points,
                                      bool infinite_tail = false);

}  // namespace capgame
