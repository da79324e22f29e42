#pragma once

#include <span>
#include <vector>

#include "capgame/points.hpp"
#include "capgame/scheduler.hpp"

namespace capgame {

/// Ranks r_k of the evaluation filtration of polynomials of degree <= N on P^1,
/// ending at the first zero.
class FiltrationProfile {
public:
  /// Throws Error(precondition) unless r_0 >= 1, each step drops by 0 or 1, and
  /// the list ends at its first zero.
  explicit FiltrationProfile(std::vector<long> ranks);

  long degree() const noexcept { return ranks_.front() - 1; }
  const std::vector<long>& ranks() const noexcept { return ranks_; }

private:
  std::vector<long> ranks_;
};

/// r_k = max(N + 1 - k, 0) for distinct points: each derivation step imposes one
/// independent condition until the space is exhausted. The schedule must reach
/// k = N + 1. Throws Error(precondition) on coincident points.
FiltrationProfile filtration_ranks(long degree, const Schedule& schedule, std::span<const MarkedPoint> points);

/// Dimension of {p : deg p <= N, p vanishes to order m_i at each point}, by exact
/// row reduction of the jet constraints. At infinity, order m caps deg p at N - m.
long rank_oracle(long degree, std::span<const MarkedPoint> points, std::span<const long> orders);

/// sum_{k>=1} k (r_{k-1} - r_k) == sum_{k>=0} r_k.
bool abel_check(const FiltrationProfile& profile);

/// sum_k r_k >= r_0 (r_0 + 1) / 2.
bool quadratic_bound_check(const FiltrationProfile& profile);

struct GrowthRow {
  long degree;
  long rank_sum;        ///< sum_k r_k
  long triangular;      ///< r_0 (r_0 + 1) / 2
  long degree_squared;  ///< N^2, the kappa N^{n+1} scale with n = 1
};

/// Growth of sum_k r_k against N^2 for N = 0..max_degree (generic profile).
std::vector<GrowthRow> growth_table(long max_degree);

}  // namespace capgame
