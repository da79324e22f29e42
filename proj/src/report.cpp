#include "capgame/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace capgame {

using nlohmann::json;

json number_json(double x) {
  if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
  if (std::isnan(x)) return json(nullptr);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  double rounded = std::strtod(buf, nullptr);
  if (rounded == 0) rounded = 0;  // no "-0.0"
  return json(rounded);
}

json extended_json(const ExtendedReal& x) { return x.is_infinite() ? json("inf") : number_json(x.value()); }

json extended_json(const ExtendedRational& x) { return x.is_infinite() ? json("inf") : number_json(x.value().get_d()); }

json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

json game_matrix_json(const GameMatrix& g) {
  json rows = json::array();
  for (const auto& row : g.entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(extended_json(e));
    rows.push_back(r);
  }
  json out = {{"entries", rows}, {"places", g.places}};
  if (!g.warnings.empty()) out["warnings"] = g.warnings;
  return out;
}

json game_value_json(const GameValueResult& r) {
  json cert = json::array();
  for (const auto& c : r.certificate) cert.push_back(extended_json(c));
  json out = {{"value", extended_json(r.value)},
              {"x_star", rationals_json(r.x_star.weights())},
              {"y_star", r.y_star ? rationals_json(r.y_star->weights()) : json(nullptr)},
              {"margin_flag", r.margin() == MarginFlag::marginal ? "marginal" : "ok"},
              {"certificate", cert}};
  if (r.value.is_finite()) out["value_exact"] = to_string(r.value.value());
  return out;
}

json schedule_json(const Schedule& s, const BoundsReport& bounds) {
  return {{"a", rationals_json(s.frequencies())},
          {"K", s.horizon()},
          {"sequence", s.id_sequence()},
          {"bounds",
           {{"max_dev", to_string(bounds.max_dev)}, {"min_dev", to_string(bounds.min_dev)}, {"verdict", bounds.verdict}}}};
}

json oracle_json(const OracleResult& r) {
  json orders = json::object();
  for (const auto& [id, m] : r.verified_orders) orders[std::to_string(id)] = m;
  json out = {{"status", r.function ? "rational" : "not_found"},
              {"numerator", r.function ? rationals_json(r.function->numerator().coefficients()) : json::array()},
              {"denominator", r.function ? rationals_json(r.function->denominator().coefficients()) : json::array()},
              {"verified_orders", orders},
              {"search_cap", r.search_cap}};
  if (r.degree) out["degree_bound"] = *r.degree;
  return out;
}

json profile_json(const FiltrationProfile& p) { return {{"N", p.degree()}, {"ranks", p.ranks()}}; }

json verdict_json(const Verdict& v) {
  json totals = json::object();
  for (const auto& [id, comb] : v.analyticity.log_size_totals) {
    json terms = json::object();
    for (const auto& [p, c] : comb.terms()) terms[std::to_string(p)] = to_string(c);
    totals[std::to_string(id)] = {{"log_coeffs", terms}, {"value", number_json(comb.to_double())}};
  }
  json out = {{"V_G", extended_json(v.game.value)},
              {"criterion_holds", v.criterion_holds},
              {"margin_flag", v.game.margin() == MarginFlag::marginal ? "marginal" : "ok"},
              {"agreement", std::string(to_string(v.agreement))},
              {"irreducible", v.irreducible},
              {"a_analytic", {{"verdict", v.analyticity.verdict}, {"log_size_totals", totals}}},
              {"matrix", game_matrix_json(v.matrix)},
              {"game", game_value_json(v.game)},
              {"oracle", oracle_json(v.oracle)}};
  if (v.schedule) {
    const auto& d = *v.schedule;
    out["schedule"] = {{"V_prime", to_string(d.v_prime)},
                       {"a", rationals_json(d.a.weights())},
                       {"K", d.horizon},
                       {"bounds",
                        {{"max_dev", to_string(d.bounds.max_dev)},
                         {"min_dev", to_string(d.bounds.min_dev)},
                         {"verdict", d.bounds.verdict}}},
                       {"weighted_floor",
                        {{"c", to_string(d.floor.c)},
                         {"precondition_ok", d.floor.precondition_ok},
                         {"diagnostic", d.floor.diagnostic}}}};
  } else {
    out["schedule"] = nullptr;
  }
  return out;
}

json error_json(const Error& e) {
  const char* kind = e.kind() == ErrorKind::parse ? "parse" : e.kind() == ErrorKind::computation ? "computation" : "precondition";
  return {{"error", {{"kind", kind}, {"message", e.what()}, {"exit_code", exit_code(e.kind())}}}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace capgame
