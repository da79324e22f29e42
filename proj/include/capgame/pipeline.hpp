#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "capgame/formal_data.hpp"
#include "capgame/game.hpp"
#include "capgame/global_matrix.hpp"
#include "capgame/potential_nonarch.hpp"
#include "capgame/rational_oracle.hpp"
#include "capgame/scheduler.hpp"

namespace capgame {

enum class Agreement { confirmed, criterion_only, oracle_only, both_negative };

std::string_view to_string(Agreement a);

/// Schedule diagnostics attached to a verdict when V_G is finite and positive.
struct ScheduleDiagnostics {
  Rational v_prime;
  Strategy a;
  std::size_t horizon = 0;
  BoundsReport bounds;
  WeightedFloor floor;
};

struct Verdict {
  GameMatrix matrix;
  GameValueResult game;
  bool criterion_holds = false;  ///< V_G > 0
  bool irreducible = false;
  AnalyticityReport analyticity;
  OracleResult oracle;
  Agreement agreement = Agreement::both_negative;
  std::optional<ScheduleDiagnostics> schedule;
};

/// Horizon of the schedule diagnostic run by run_check.
inline constexpr std::size_t kDiagnosticHorizon = 1000;

/// Full pipeline: place matrices, G, V_G, schedule diagnostics, and the
/// independent rationality oracle, compared but never merged.
Verdict run_check(const ProblemSpec& spec);

}  // namespace capgame
