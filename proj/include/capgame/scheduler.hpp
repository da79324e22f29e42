#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capgame/game.hpp"
#include "capgame/points.hpp"

namespace capgame {

/// Greedy derivation order i_1..i_K for target frequencies a: at each step take
/// the index minimizing omega_i(k) - k a_i, ties to the smallest point id.
class Schedule {
public:
  /// Throws Error(precondition) if some a_i <= 0, a does not sum to 1, or
  /// ids.size() != a.size().
  static Schedule build(const std::vector<Rational>& a, std::size_t horizon, std::vector<PointId> ids);

  /// Builds from an explicit sequence of indices into `a` (no greedy rule). Used
  /// to examine arbitrary orders with check_bounds.
  static Schedule from_sequence(const std::vector<Rational>& a, std::vector<std::size_t> sequence,
                                std::vector<PointId> ids);

  const std::vector<Rational>& frequencies() const noexcept { return a_; }
  std::size_t horizon() const noexcept { return sequence_.size(); }
  const std::vector<PointId>& ids() const noexcept { return ids_; }
  /// Indices into the point list, one per step.
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  /// Point ids, one per step.
  std::vector<PointId> id_sequence() const;
  /// omega_i(k) for all i.
  std::vector<long> counters(std::size_t k) const;

private:
  std::vector<Rational> a_;
  std::vector<PointId> ids_;
  std::vector<std::size_t> sequence_;
};

struct BoundsReport {
  Rational max_dev;  ///< max over i, k of omega_i(k) - k a_i
  Rational min_dev;
  bool verdict = true;  ///< 1 - |I| <= omega_i(k) - k a_i <= 1 throughout
};

BoundsReport check_bounds(const Schedule& schedule);

struct WeightedFloor {
  Rational c;                     ///< smallest c >= 0 with sum_i omega_i(k) G_ij >= k V' - c
  bool precondition_ok = true;    ///< sum_i a_i G_ij > V' for every column
  std::string diagnostic;
};

WeightedFloor weighted_floor(const Schedule& schedule, const RationalGameMatrix& g, const Rational& v_prime);

}  // namespace capgame
