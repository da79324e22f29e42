#pragma once

#include <vector>

#include "capgame/linalg.hpp"

namespace capgame {

struct PackingLpResult {
  std::vector<Rational> y;
  Rational objective;
  std::size_t pivots = 0;
};

/// Exact tableau simplex with Bland's rule for the packing LP
///   maximize sum(y)  subject to  A y <= 1, y >= 0,
/// with every entry of A strictly positive (so the slack basis is feasible and
/// the optimum is bounded).
PackingLpResult solve_packing_lp(const RationalMatrix& a);

}  // namespace capgame
