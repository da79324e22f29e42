#pragma once

#include <string>

#include <json.hpp>

#include "capgame/error.hpp"
#include "capgame/pipeline.hpp"
#include "capgame/slopes.hpp"

namespace capgame {

/// Double rounded to 15 significant digits (so reports are byte-stable).
nlohmann::json number_json(double x);
nlohmann::json extended_json(const ExtendedReal& x);
nlohmann::json extended_json(const ExtendedRational& x);
nlohmann::json rationals_json(const std::vector<Rational>& v);

nlohmann::json arch_domain_json(const ArchDomain& domain);
nlohmann::json nonarch_place_json(const NonArchPlace& place);

nlohmann::json game_matrix_json(const GameMatrix& g);
nlohmann::json game_value_json(const GameValueResult& r);
nlohmann::json schedule_json(const Schedule& s, const BoundsReport& bounds);
nlohmann::json oracle_json(const OracleResult& r);
nlohmann::json profile_json(const FiltrationProfile& p);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json error_json(const Error& e);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string render(const nlohmann::json& j);

}  // namespace capgame
