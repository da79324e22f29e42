#include "capgame/simplex.hpp"

#include "capgame/error.hpp"

namespace capgame {

PackingLpResult solve_packing_lp(const RationalMatrix& a) {
  const std::size_t m = a.size();
  if (m == 0) precondition_error("packing LP needs at least one row");
  const std::size_t n = a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) precondition_error("packing LP matrix is ragged");
    for (const auto& v : row)
      if (v <= 0) precondition_error("packing LP needs a strictly positive matrix");
  }

  // Columns: n structural, m slack, 1 right-hand side.
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  RationalMatrix t = zero_matrix(m, width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = 1;
  }
  // Reduced costs; obj[rhs] holds minus the objective value.
  std::vector<Rational> obj(width);
  for (std::size_t j = 0; j < n; ++j) obj[j] = 1;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  PackingLpResult result;
  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == rhs) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) computation_error("packing LP unbounded");

    const Rational inv = 1 / t[leave][enter];
    for (auto& v : t[leave]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational f = obj[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) obj[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++result.pivots;
  }

  result.y.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) result.y[basis[i]] = t[i][rhs];
  result.objective = -obj[rhs];
  return result;
}

}  // namespace capgame
