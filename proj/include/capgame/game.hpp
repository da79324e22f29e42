#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "capgame/global_matrix.hpp"
#include "capgame/rational.hpp"

namespace capgame {

/// Exact version of a game matrix; entries in Q or +inf.
using RationalGameMatrix = std::vector<std::vector<ExtendedRational>>;

/// Continued-fraction rationalization of every finite entry (denominators <= 10^12).
RationalGameMatrix rationalize(const GameMatrix& g);

/// Mixed strategy: nonnegative rationals summing to exactly 1.
class Strategy {
public:
  Strategy() = default;
  /// Throws Error(precondition) unless weights are >= 0 and sum to 1.
  explicit Strategy(std::vector<Rational> weights);

  static Strategy uniform(std::size_t n);
  static Strategy pure(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

  friend bool operator==(const Strategy&, const Strategy&) = default;

private:
  std::vector<Rational> weights_;
};

enum class MarginFlag { ok, marginal };

struct GameValueResult {
  ExtendedRational value;                    ///< sup_x inf_y <x, G y>
  Strategy x_star;                           ///< maximizing row strategy
  std::optional<Strategy> y_star;            ///< minimizing column strategy; absent when value = +inf
  std::vector<ExtendedRational> certificate; ///< column payoffs sum_i x*_i G_ij on the true matrix
  unsigned cap_doublings = 0;                ///< big-M doublings used for infinite entries

  double value_real() const { return value.is_infinite() ? std::numeric_limits<double>::infinity() : value.value().get_d(); }
  /// "marginal" when |value| < 1e-6: the criterion is an open condition.
  MarginFlag margin() const;
};

/// min_j sum_i x_i G_ij with 0 * (+inf) = 0.
ExtendedRational payoff_floor(const RationalGameMatrix& g, const Strategy& x);
ExtendedReal payoff_floor(const GameMatrix& g, const Strategy& x);

/// Column payoffs sum_i x_i G_ij with 0 * (+inf) = 0.
std::vector<ExtendedRational> column_payoffs(const RationalGameMatrix& g, const Strategy& x);

/// Value of the zero-sum game by exact LP. Infinite entries: +inf when every
/// column holds an infinity (a fully mixed row strategy then earns +inf);
/// otherwise infinities are capped at M, doubling from 1 + n max|G_ij| until the
/// value settles.
GameValueResult game_value(const RationalGameMatrix& g);
GameValueResult game_value(const GameMatrix& g);

struct MinimaxValues {
  Rational sup_inf;
  Rational inf_sup;
};

/// The two one-sided values from separate LP solves. All entries must be finite.
MinimaxValues minimax_values(const RationalGameMatrix& g);
/// sup_inf == inf_sup, exactly.
bool minimax_check(const RationalGameMatrix& g);

/// Fully mixed rational strategy a (all a_i > 0) with sum_i a_i G_ij > v_prime for
/// every column j, verified exactly. Requires v_prime < game_value(g).value.
Strategy rational_strategy(const RationalGameMatrix& g, const Rational& v_prime);

}  // namespace capgame
