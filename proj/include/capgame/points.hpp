#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capgame/rational.hpp"

namespace capgame {

using PointId = long;

/// A rational point of P^1: a finite coordinate or infinity.
///
/// The local parameter is fixed by the coordinate: t = z - p at a finite
/// point p and t = 1/z at infinity.
class Coordinate {
public:
  Coordinate() = default;
  Coordinate(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit from finite values
  static Coordinate infinity() { return Coordinate(std::nullopt); }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  /// Finite coordinate; must not be called on infinity.
  const Rational& value() const { return *value_; }

  /// "p/q" or "inf".
  std::string to_string() const;
  /// Accepts "inf" (also "infinity", "∞") or a rational.
  static Coordinate parse(std::string_view text);

  friend bool operator==(const Coordinate&, const Coordinate&) = default;

private:
  explicit Coordinate(std::nullopt_t) {}
  std::optional<Rational> value_;
};

struct MarkedPoint {
  PointId id = 0;
  Coordinate coordinate;

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Rescaling xi'_i = a_i xi_i of the tangent basis at a point.
struct TangentScaling {
  PointId point = 0;
  Rational scalar{1};

  friend bool operator==(const TangentScaling&, const TangentScaling&) = default;
};

/// Exact jet c_0 + c_1 t + ... + c_M t^M in the point's local parameter.
struct LocalSeries {
  PointId point = 0;
  std::vector<Rational> coefficients;

  /// Truncation order M (coefficients.size() - 1); -1 for an empty jet.
  long order() const noexcept { return static_cast<long>(coefficients.size()) - 1; }

  friend bool operator==(const LocalSeries&, const LocalSeries&) = default;
};

/// Scalar for `point`, 1 when absent.
Rational scaling_for(const std::vector<TangentScaling>& scalings, PointId point);

}  // namespace capgame
