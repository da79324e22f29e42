#include "capgame/game.hpp"

#include <algorithm>
#include <cmath>

#include "capgame/error.hpp"
#include "capgame/simplex.hpp"

namespace capgame {

namespace {

const Integer kMaxDenominator("1000000000000");
constexpr unsigned kMaxDoublings = 60;

struct OneSided {
  Rational value;
  std::vector<Rational> strategy;
};

/// inf_y max_i (A y)_i for a finite matrix, with the minimizing y.
OneSided inf_sup(const RationalMatrix& a) {
  Rational lo = a.front().front();
  for (const auto& row : a)
    for (const auto& v : row) lo = std::min(lo, v);
  const Rational shift = 1 - lo;  // makes every entry >= 1
  RationalMatrix shifted = a;
  for (auto& row : shifted)
    for (auto& v : row) v += shift;
  PackingLpResult lp = solve_packing_lp(shifted);
  OneSided out;
  out.value = 1 / lp.objective - shift;
  out.strategy = lp.y;
  for (auto& v : out.strategy) v /= lp.objective;
  return out;
}

/// sup_x min_j (x^T A)_j = -inf_sup(-A^T).
OneSided sup_inf(const RationalMatrix& a) {
  const std::size_t n = a.size(), m = a.front().size();
  RationalMatrix neg_t = zero_matrix(m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) neg_t[j][i] = -a[i][j];
  OneSided r = inf_sup(neg_t);
  r.value = -r.value;
  return r;
}

void check_square(const RationalGameMatrix& g) {
  if (g.empty()) precondition_error("empty game matrix");
  for (const auto& row : g)
    if (row.size() != g.size()) precondition_error("game matrix must be square");
}

RationalMatrix capped(const RationalGameMatrix& g, const Rational& cap) {
  RationalMatrix out = zero_matrix(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i][j] = g[i][j].is_infinite() ? cap : g[i][j].value();
  return out;
}

bool all_finite(const RationalGameMatrix& g) {
  for (const auto& row : g)
    for (const auto& v : row)
      if (v.is_infinite()) return false;
  return true;
}

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

RationalGameMatrix rationalize(const GameMatrix& g) {
  RationalGameMatrix out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& v : g.entries[i])
      out[i].push_back(v.is_infinite() ? ExtendedRational::infinity()
                                       : ExtendedRational(rationalize(v.value(), kMaxDenominator)));
  return out;
}

Strategy::Strategy(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Rational sum(0);
  for (const auto& w : weights_) {
    if (w < 0) precondition_error("strategy weights must be nonnegative");
    sum += w;
  }
  if (sum != 1) precondition_error("strategy weights must sum to 1");
}

Strategy Strategy::uniform(std::size_t n) {
  return Strategy(std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
}

Strategy Strategy::pure(std::size_t n, std::size_t i) {
  std::vector<Rational> w(n);
  w.at(i) = 1;
  return Strategy(std::move(w));
}

MarginFlag GameValueResult::margin() const {
  if (value.is_infinite()) return MarginFlag::ok;
  return std::abs(value.value().get_d()) < 1e-6 ? MarginFlag::marginal : MarginFlag::ok;
}

std::vector<ExtendedRational> column_payoffs(const RationalGameMatrix& g, const Strategy& x) {
  check_square(g);
  if (x.size() != g.size()) precondition_error("strategy size does not match the matrix");
  std::vector<ExtendedRational> out;
  for (std::size_t j = 0; j < g.size(); ++j) {
    ExtendedRational sum(Rational(0));
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (x[i] == 0) continue;
      sum = sum + (g[i][j].is_infinite() ? ExtendedRational::infinity() : ExtendedRational(Rational(x[i] * g[i][j].value())));
    }
    out.push_back(sum);
  }
  return out;
}

ExtendedRational payoff_floor(const RationalGameMatrix& g, const Strategy& x) {
  auto cols = column_payoffs(g, x);
  return *std::min_element(cols.begin(), cols.end());
}

ExtendedReal payoff_floor(const GameMatrix& g, const Strategy& x) {
  if (x.size() != g.size()) precondition_error("strategy size does not match the matrix");
  ExtendedReal best = ExtendedReal::infinity();
  for (std::size_t j = 0; j < g.size(); ++j) {
    ExtendedReal sum(0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (x[i] == 0) continue;
      sum = sum + (g(i, j).is_infinite() ? ExtendedReal::infinity() : ExtendedReal(x[i].get_d() * g(i, j).value()));
    }
    best = std::min(best, sum);
  }
  return best;
}

GameValueResult game_value(const RationalGameMatrix& g) {
  check_square(g);
  const std::size_t n = g.size();
  GameValueResult result;

  if (all_finite(g)) {
    const RationalMatrix a = capped(g, Rational(0));
    OneSided row = sup_inf(a);
    OneSided col = inf_sup(a);
    if (row.value != col.value) computation_error("LP duality gap in game value");
    result.value = ExtendedRational(row.value);
    result.x_star = Strategy(row.strategy);
    result.y_star = Strategy(col.strategy);
    result.certificate = column_payoffs(g, result.x_star);
    return result;
  }

  // Every column has an infinity: the uniform strategy earns +inf everywhere.
  bool every_column_infinite = true;
  for (std::size_t j = 0; j < n && every_column_infinite; ++j) {
    bool has = false;
    for (std::size_t i = 0; i < n; ++i) has |= g[i][j].is_infinite();
    every_column_infinite = has;
  }
  if (every_column_infinite) {
    result.value = ExtendedRational::infinity();
    result.x_star = Strategy::uniform(n);
    result.certificate = column_payoffs(g, result.x_star);
    return result;
  }

  Rational max_abs(0);
  for (const auto& row : g)
    for (const auto& v : row)
      if (v.is_finite()) max_abs = std::max(max_abs, abs_q(v.value()));
  Rational cap = 1 + Rational(static_cast<long>(n)) * max_abs;

  std::optional<OneSided> prev;
  OneSided row, col;
  bool settled = false;
  for (unsigned d = 0; d <= kMaxDoublings; ++d) {
    const RationalMatrix a = capped(g, cap);
    row = sup_inf(a);
    col = inf_sup(a);
    result.cap_doublings = d;
    if (prev) {
      const Rational diff = abs_q(row.value - prev->value);
      if (diff == 0 || diff.get_d() <= 1e-12 * (1 + std::abs(row.value.get_d()))) {
        settled = true;
        break;
      }
    }
    prev = row;
    cap *= 2;
  }
  if (!settled) {
    result.value = ExtendedRational::infinity();
    result.x_star = Strategy(row.strategy);
    result.certificate = column_payoffs(g, result.x_star);
    return result;
  }
  result.value = ExtendedRational(row.value);
  result.x_star = Strategy(row.strategy);
  result.y_star = Strategy(col.strategy);
  result.certificate = column_payoffs(g, result.x_star);
  return result;
}

GameValueResult game_value(const GameMatrix& g) { return game_value(rationalize(g)); }

MinimaxValues minimax_values(const RationalGameMatrix& g) {
  check_square(g);
  if (!all_finite(g)) precondition_error("minimax check requires finite entries");
  const RationalMatrix a = capped(g, Rational(0));
  return {sup_inf(a).value, inf_sup(a).value};
}

bool minimax_check(const RationalGameMatrix& g) {
  const auto v = minimax_values(g);
  return v.sup_inf == v.inf_sup;
}

Strategy rational_strategy(const RationalGameMatrix& g, const Rational& v_prime) {
  const GameValueResult gv = game_value(g);
  if (gv.value.is_finite() && v_prime >= gv.value.value())
    precondition_error("V' must be strictly below the game value");
  const std::size_t n = g.size();

  auto beats = [&](const Strategy& a) {
    for (const auto& c : column_payoffs(g, a))
      if (!(c > ExtendedRational(v_prime))) return false;
    return true;
  };
  auto fully_mixed = [](const std::vector<Rational>& w) {
    return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x > 0; });
  };

  const Rational bary(1, static_cast<long>(n));
  Rational eps(1, 2);
  for (int attempt = 0; attempt < 256; ++attempt, eps /= 2) {
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = (1 - eps) * gv.x_star[i] + eps * bary;
    Strategy blended(w);
    if (!beats(blended)) continue;

    // Prefer small denominators: round each coordinate, renormalize, re-verify.
    for (long bound : {100L, 10000L, 1000000L}) {
      std::vector<Rational> r(n);
      Rational sum(0);
      for (std::size_t i = 0; i < n; ++i) {
        r[i] = rationalize(w[i].get_d(), Integer(bound));
        sum += r[i];
      }
      if (sum <= 0 || !fully_mixed(r)) continue;
      for (auto& x : r) x /= sum;
      Strategy simple(r);
      if (beats(simple)) return simple;
    }
    return blended;
  }
  computation_error("no fully mixed strategy beats V'");
}

}  // namespace capgame
