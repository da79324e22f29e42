#include "capgame/slopes.hpp"

#include <algorithm>

#include "capgame/error.hpp"
#include "capgame/linalg.hpp"

namespace capgame {

FiltrationProfile::FiltrationProfile(std::vector<long> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty() || ranks_.front() < 1) precondition_error("filtration profile must start at a positive rank");
  for (std::size_t k = 1; k < ranks_.size(); ++k) {
    const long step = ranks_[k - 1] - ranks_[k];
    if (step != 0 && step != 1) precondition_error("filtration ranks must drop by at most one per step");
    if (ranks_[k - 1] == 0) precondition_error("filtration profile must end at its first zero");
  }
  if (ranks_.back() != 0) precondition_error("filtration profile must end at zero");
}

FiltrationProfile filtration_ranks(long degree, const Schedule& schedule, std::span<const MarkedPoint> points) {
  if (degree < 0) precondition_error("degree must be nonnegative");
  if (points.size() != schedule.frequencies().size()) precondition_error("schedule does not match the points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].coordinate == points[j].coordinate) precondition_error("coincident marked points");
  if (schedule.horizon() < static_cast<std::size_t>(degree + 1))
    precondition_error("schedule horizon too short to exhaust the filtration");
  std::vector<long> r;
  for (long k = 0; k <= degree + 1; ++k) r.push_back(std::max(degree + 1 - k, 0L));
  return FiltrationProfile(std::move(r));
}

long rank_oracle(long degree, std::span<const MarkedPoint> points, std::span<const long> orders) {
  if (degree < 0) precondition_error("degree must be nonnegative");
  if (points.size() != orders.size()) precondition_error("one vanishing order per point");
  const std::size_t cols = static_cast<std::size_t>(degree + 1);
  RationalMatrix rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (orders[i] < 0) precondition_error("vanishing orders must be nonnegative");
    for (long d = 0; d < orders[i]; ++d) {
      std::vector<Rational> row(cols);
      if (points[i].coordinate.is_infinity()) {
        // Coefficient of z^{N-d} must vanish.
        if (degree - d >= 0) row[static_cast<std::size_t>(degree - d)] = 1;
      } else {
        // d-th derivative at p divided by d!: sum_n C(n, d) p^{n-d} c_n.
        const Rational& p = points[i].coordinate.value();
        for (long n = d; n <= degree; ++n) {
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
          Rational pw(1);
          for (long e = 0; e < n - d; ++e) pw *= p;
          row[static_cast<std::size_t>(n)] = Rational(binom) * pw;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long>(cols) - static_cast<long>(rank(rows));
}

bool abel_check(const FiltrationProfile& profile) {
  const auto& r = profile.ranks();
  long lhs = 0, rhs = 0;
  for (std::size_t k = 1; k < r.size(); ++k) lhs += static_cast<long>(k) * (r[k - 1] - r[k]);
  for (long v : r) rhs += v;
  return lhs == rhs;
}

bool quadratic_bound_check(const FiltrationProfile& profile) {
  const auto& r = profile.ranks();
  long sum = 0;
  for (long v : r) sum += v;
  const long r0 = r.front();
  return 2 * sum >= r0 * (r0 + 1);
}

std::vector<GrowthRow> growth_table(long max_degree) {
  std::vector<GrowthRow> rows;
  for (long n = 0; n <= max_degree; ++n) {
    long sum = 0;
    for (long k = 0; k <= n + 1; ++k) sum += std::max(n + 1 - k, 0L);
    rows.push_back({n, sum, (n + 1) * (n + 2) / 2, n * n});
  }
  return rows;
}

}  // namespace capgame
