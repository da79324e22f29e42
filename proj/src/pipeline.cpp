#include "capgame/pipeline.hpp"

namespace capgame {

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::confirmed: return "confirmed";
    case Agreement::criterion_only: return "criterion_only";
    case Agreement::oracle_only: return "oracle_only";
    case Agreement::both_negative: return "both_negative";
  }
  return "both_negative";
}

Verdict run_check(const ProblemSpec& spec) {
  Verdict v;
  v.matrix = global_matrix(spec);
  v.irreducible = irreducibility(v.matrix);
  v.analyticity = a_analyticity_check(spec.nonarch_places, spec.points, spec.infinite_tail);

  const RationalGameMatrix g = rationalize(v.matrix);
  v.game = game_value(g);
  v.criterion_holds = v.game.value > ExtendedRational(Rational(0));

  if (v.game.value.is_finite() && v.criterion_holds) {
    ScheduleDiagnostics d;
    d.v_prime = v.game.value.value() / 2;
    d.a = rational_strategy(g, d.v_prime);
    d.horizon = kDiagnosticHorizon;
    std::vector<PointId> ids;
    for (const auto& p : spec.points) ids.push_back(p.id);
    const Schedule s = Schedule::build(d.a.weights(), d.horizon, ids);
    d.bounds = check_bounds(s);
    d.floor = weighted_floor(s, g, d.v_prime);
    v.schedule = std::move(d);
  }

  std::optional<std::size_t> cap;
  if (spec.degree_bound) cap = static_cast<std::size_t>(*spec.degree_bound);
  v.oracle = search_rational(spec.points, spec.series, cap);

  const bool found = v.oracle.function.has_value();
  if (v.criterion_holds && found)
    v.agreement = Agreement::confirmed;
  else if (v.criterion_holds)
    v.agreement = Agreement::criterion_only;
  else if (found)
    v.agreement = Agreement::oracle_only;
  else
    v.agreement = Agreement::both_negative;
  return v;
}

}  // namespace capgame
