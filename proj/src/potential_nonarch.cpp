#include "capgame/potential_nonarch.hpp"

#include <cmath>
#include <string>

#include "capgame/error.hpp"

namespace capgame {

std::string_view to_string(SizePreset preset) {
  switch (preset) {
    case SizePreset::good_reduction: return "good_reduction";
    case SizePreset::leaf: return "leaf";
    case SizePreset::leaf_p_curvature: return "leaf_p_curvature";
  }
  return "good_reduction";
}

SizePreset parse_size_preset(std::string_view text) {
  if (text == "good_reduction") return SizePreset::good_reduction;
  if (text == "leaf") return SizePreset::leaf;
  if (text == "leaf_p_curvature") return SizePreset::leaf_p_curvature;
  parse_error("unknown size preset '" + std::string(text) + "'");
}

void LogCombination::add(long prime, const Rational& coeff) {
  if (coeff == 0) return;
  Rational& slot = terms_[prime];
  slot += coeff;
  if (slot == 0) terms_.erase(prime);
}

double LogCombination::to_double() const {
  double sum = 0;
  for (const auto& [p, c] : terms_) sum += c.get_d() * std::log(static_cast<double>(p));
  return sum;
}

Rational NonArchPlace::log_size_coeff(PointId point) const {
  if (auto it = presets.find(point); it != presets.end()) return size_preset(it->second, prime);
  if (auto it = log_size_coeffs.find(point); it != log_size_coeffs.end()) return it->second;
  return Rational(0);
}

void validate_place(const NonArchPlace& place) {
  if (!is_prime(place.prime)) precondition_error(std::to_string(place.prime) + " is not prime");
  for (const auto& [id, q] : place.log_size_coeffs) {
    if (q > 0)
      precondition_error("log size coefficient of point " + std::to_string(id) + " at p=" +
                         std::to_string(place.prime) + " must be <= 0");
    if (place.presets.contains(id))
      precondition_error("point " + std::to_string(id) + " has both a preset and an explicit size at p=" +
                         std::to_string(place.prime));
  }
  for (const auto& [ij, c] : place.off_diagonal) {
    if (ij.first == ij.second) precondition_error("off_diagonal entry on the diagonal");
    if (c < 0) precondition_error("off_diagonal coefficients must be >= 0");
  }
}

Rational size_preset(SizePreset kind, long p) {
  if (!is_prime(p)) precondition_error(std::to_string(p) + " is not prime");
  switch (kind) {
    case SizePreset::good_reduction: return Rational(0);
    case SizePreset::leaf: return Rational(-1, p - 1);
    case SizePreset::leaf_p_curvature: return Rational(-1, p * (p - 1));
  }
  return Rational(0);
}

NonArchMatrix nonarch_matrix(const NonArchPlace& place, std::span<const MarkedPoint> points,
                             const std::vector<TangentScaling>& scalings) {
  validate_place(place);
  const std::size_t n = points.size();
  NonArchMatrix m{place.prime, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational a = scaling_for(scalings, points[i].id);
    if (a == 0) precondition_error("zero tangent scaling at point " + std::to_string(points[i].id));
    m.coeffs[i][i] = place.log_size_coeff(points[i].id) + valuation(a, place.prime);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (auto it = place.off_diagonal.find({points[i].id, points[j].id}); it != place.off_diagonal.end())
        m.coeffs[i][j] = it->second;
    }
  }
  m.coeffs.shrink_to_fit();
  return m;
}

AnalyticityReport a_analyticity_check(std::span<const NonArchPlace> places, std::span<const MarkedPoint> points,
                                      bool infinite_tail) {
  AnalyticityReport report;
  for (const auto& pt : points) report.log_size_totals[pt.id];
  for (const auto& place : places)
    for (const auto& pt : points) report.log_size_totals[pt.id].add(place.prime, place.log_size_coeff(pt.id));
  report.verdict = !infinite_tail;
  return report;
}

}  // namespace capgame
