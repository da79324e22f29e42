#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "capgame/game.hpp"
#include "capgame/linalg.hpp"
#include "capgame/rational.hpp"

namespace capgame::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline std::vector<Rational> qs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

/// Uniform rational num/den with |num| <= max_num, 1 <= den <= max_den.
inline Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline RationalGameMatrix finite_game(const std::vector<std::vector<Rational>>& m) {
  RationalGameMatrix g;
  for (const auto& row : m) {
    std::vector<ExtendedRational> r;
    for (const auto& v : row) r.emplace_back(v);
    g.push_back(std::move(r));
  }
  return g;
}

/// Game value by Shapley-Snow kernel enumeration: every square submatrix A with
/// 1'A^{-1}1 != 0 proposes v = 1/(1'A^{-1}1) and strategies proportional to
/// 1'A^{-1} and A^{-1}1; the first pair that is optimal on the full matrix wins.
/// Exponential in n; independent of the simplex code.
inline Rational kernel_game_value(RationalMatrix g) {
  const std::size_t n = g.size();
  // Shift to a strictly positive matrix so the value is nonzero.
  Rational lo = g[0][0];
  for (const auto& row : g)
    for (const auto& v : row) lo = std::min(lo, v);
  const Rational shift = 1 - lo;
  for (auto& row : g)
    for (auto& v : row) v += shift;
  auto solve = [](RationalMatrix a, std::vector<Rational> b) -> std::optional<std::vector<Rational>> {
    const std::size_t k = a.size();
    for (std::size_t i = 0; i < k; ++i) a[i].push_back(b[i]);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t sel = col;
      while (sel < k && a[sel][col] == 0) ++sel;
      if (sel == k) return std::nullopt;
      std::swap(a[sel], a[col]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (std::size_t j = col; j <= k; ++j) a[r][j] -= f * a[col][j];
      }
    }
    std::vector<Rational> x(k);
    for (std::size_t i = 0; i < k; ++i) x[i] = a[i][k] / a[i][i];
    return x;
  };
  for (unsigned rows = 1; rows < (1u << n); ++rows)
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      std::vector<std::size_t> R, C;
      for (std::size_t i = 0; i < n; ++i) {
        if (rows >> i & 1) R.push_back(i);
        if (cols >> i & 1) C.push_back(i);
      }
      if (R.size() != C.size()) continue;
      const std::size_t k = R.size();
      RationalMatrix a(k, std::vector<Rational>(k)), at(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          a[i][j] = g[R[i]][C[j]];
          at[j][i] = g[R[i]][C[j]];
        }
      auto y = solve(a, std::vector<Rational>(k, Rational(1)));   // A y = 1
      auto x = solve(at, std::vector<Rational>(k, Rational(1)));  // A' x = 1
      if (!y || !x) continue;
      Rational sy(0), sx(0);
      for (auto& v : *y) sy += v;
      for (auto& v : *x) sx += v;
      if (sy == 0 || sy != sx) continue;
      const Rational v = 1 / sy;
      std::vector<Rational> xf(n), yf(n);
      bool nonneg = true;
      for (std::size_t i = 0; i < k; ++i) {
        xf[R[i]] = (*x)[i] * v;
        yf[C[i]] = (*y)[i] * v;
        nonneg &= xf[R[i]] >= 0 && yf[C[i]] >= 0;
      }
      if (!nonneg) continue;
      bool optimal = true;
      for (std::size_t j = 0; j < n && optimal; ++j) {
        Rational col(0), row(0);
        for (std::size_t i = 0; i < n; ++i) {
          col += xf[i] * g[i][j];
          row += g[j][i] * yf[i];
        }
        optimal = col >= v && row <= v;
      }
      if (optimal) return v - shift;
    }
  throw std::runtime_error("kernel enumeration found no solution");
}

}  // namespace capgame::testing
