#include "capgame/formal_data.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "capgame/error.hpp"

namespace capgame {

using nlohmann::json;

// ---- points.hpp ------------------------------------------------------------

std::string Coordinate::to_string() const { return is_infinity() ? "inf" : capgame::to_string(*value_); }

Coordinate Coordinate::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "∞") return infinity();
  return Coordinate(parse_rational(text));
}

Rational scaling_for(const std::vector<TangentScaling>& scalings, PointId point) {
  for (const auto& s : scalings)
    if (s.point == point) return s.scalar;
  return Rational(1);
}

// ---- parsing ---------------------------------------------------------------

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) { parse_error(path + ": " + what); }

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) field_error(path, std::string("missing field '") + key + "'");
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) known |= it.key() == k;
    if (!known) field_error(path, "unknown field '" + it.key() + "'");
  }
}

Rational rational_field(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const Error& e) {
    field_error(path, e.what());
  }
  field_error(path, "expected a rational string \"p/q\"");
}

PointId id_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<PointId>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t used = 0;
      PointId id = std::stol(s, &used);
      if (used == s.size()) return id;
    } catch (const std::exception&) {
    }
  }
  field_error(path, "expected an integer point id");
}

PointId id_key(const std::string& key, const std::string& path) { return id_field(json(key), path); }

SimpleDomain simple_domain(const json& j, const std::string& path) {
  const std::string kind = require(j, "kind", path).get<std::string>();
  if (kind == "disk" || kind == "exterior_disk") {
    reject_unknown(j, {"kind", "center", "radius"}, path);
    Rational c = rational_field(require(j, "center", path), path + ".center");
    Rational r = rational_field(require(j, "radius", path), path + ".radius");
    if (kind == "disk") return Disk{c, r};
    return ExteriorDisk{c, r};
  }
  if (kind == "interval_complement") {
    reject_unknown(j, {"kind", "a", "b"}, path);
    return IntervalComplement{rational_field(require(j, "a", path), path + ".a"),
                              rational_field(require(j, "b", path), path + ".b")};
  }
  field_error(path + ".kind", "unknown domain kind '" + kind + "'");
}

ArchDomain arch_domain(const json& j, const std::string& path) {
  const json& kind = require(j, "kind", path);
  if (!kind.is_string()) field_error(path + ".kind", "expected a string");
  if (kind.get<std::string>() == "union") {
    reject_unknown(j, {"kind", "components"}, path);
    const json& comps = require(j, "components", path);
    if (!comps.is_array()) field_error(path + ".components", "expected an array");
    DisjointUnion u;
    for (std::size_t k = 0; k < comps.size(); ++k)
      u.components.push_back(simple_domain(comps[k], path + ".components[" + std::to_string(k) + "]"));
    return u;
  }
  return std::visit([](const auto& d) { return ArchDomain(d); }, simple_domain(j, path));
}

ArchDomainAssignment arch_assignment(const json& j, const std::string& path) {
  reject_unknown(j, {"domain", "placement"}, path);
  ArchDomainAssignment a;
  a.domain = arch_domain(require(j, "domain", path), path + ".domain");
  if (auto it = j.find("placement"); it != j.end()) {
    if (!it->is_object()) field_error(path + ".placement", "expected an object");
    for (auto p = it->begin(); p != it->end(); ++p) {
      const std::string where = path + ".placement." + p.key();
      if (!p->is_number_unsigned()) field_error(where, "expected a component index");
      a.placement[id_key(p.key(), where)] = p->get<std::size_t>();
    }
  }
  return a;
}

NonArchPlace nonarch_place(const json& j, const std::string& path) {
  reject_unknown(j, {"p", "log_size_coeffs", "off_diagonal", "preset"}, path);
  NonArchPlace place;
  const json& p = require(j, "p", path);
  if (!p.is_number_integer()) field_error(path + ".p", "expected an integer prime");
  place.prime = p.get<long>();
  if (auto it = j.find("log_size_coeffs"); it != j.end()) {
    if (!it->is_object()) field_error(path + ".log_size_coeffs", "expected an object");
    for (auto q = it->begin(); q != it->end(); ++q) {
      const std::string where = path + ".log_size_coeffs." + q.key();
      place.log_size_coeffs[id_key(q.key(), where)] = rational_field(*q, where);
    }
  }
  if (auto it = j.find("preset"); it != j.end()) {
    if (!it->is_object()) field_error(path + ".preset", "expected an object");
    for (auto q = it->begin(); q != it->end(); ++q) {
      const std::string where = path + ".preset." + q.key();
      if (!q->is_string()) field_error(where, "expected a preset name");
      try {
        place.presets[id_key(q.key(), where)] = parse_size_preset(q->get<std::string>());
      } catch (const Error& e) {
        field_error(where, e.what());
      }
    }
  }
  if (auto it = j.find("off_diagonal"); it != j.end()) {
    if (!it->is_object()) field_error(path + ".off_diagonal", "expected an object");
    for (auto q = it->begin(); q != it->end(); ++q) {
      const std::string where = path + ".off_diagonal." + q.key();
      const auto comma = q.key().find(',');
      if (comma == std::string::npos) field_error(where, "expected a key \"i,j\"");
      PointId i = id_key(q.key().substr(0, comma), where);
      PointId k = id_key(q.key().substr(comma + 1), where);
      place.off_diagonal[{i, k}] = rational_field(*q, where);
    }
  }
  return place;
}

ExtendedReal extended_field(const json& v, const std::string& path) {
  if (v.is_number()) return ExtendedReal(v.get<double>());
  if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "+inf")) return ExtendedReal::infinity();
  field_error(path, "expected a number or \"inf\"");
}

// ---- serialization ---------------------------------------------------------

json simple_domain_json(const SimpleDomain& d) {
  return std::visit(
      [](const auto& x) -> json {
        using D = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<D, IntervalComplement>)
          return {{"kind", "interval_complement"}, {"a", to_string(x.a)}, {"b", to_string(x.b)}};
        else
          return {{"kind", std::is_same_v<D, Disk> ? "disk" : "exterior_disk"},
                  {"center", to_string(x.center)},
                  {"radius", to_string(x.radius)}};
      },
      d);
}

}  // namespace

json arch_domain_json(const ArchDomain& domain) {
  if (const auto* u = std::get_if<DisjointUnion>(&domain)) {
    json comps = json::array();
    for (const auto& c : u->components) comps.push_back(simple_domain_json(c));
    return {{"kind", "union"}, {"components", comps}};
  }
  return simple_domain_json(components(domain).front());
}

json nonarch_place_json(const NonArchPlace& place) {
  json j = {{"p", place.prime}};
  if (!place.log_size_coeffs.empty()) {
    json q = json::object();
    for (const auto& [id, c] : place.log_size_coeffs) q[std::to_string(id)] = to_string(c);
    j["log_size_coeffs"] = q;
  }
  if (!place.presets.empty()) {
    json q = json::object();
    for (const auto& [id, k] : place.presets) q[std::to_string(id)] = std::string(to_string(k));
    j["preset"] = q;
  }
  if (!place.off_diagonal.empty()) {
    json q = json::object();
    for (const auto& [ij, c] : place.off_diagonal)
      q[std::to_string(ij.first) + "," + std::to_string(ij.second)] = to_string(c);
    j["off_diagonal"] = q;
  }
  return j;
}

std::size_t ProblemSpec::index_of(PointId id) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].id == id) return i;
  precondition_error("unknown point id " + std::to_string(id));
}

void validate_problem(const ProblemSpec& spec) {
  if (spec.points.empty()) parse_error("points: at least one marked point is required");
  std::set<PointId> ids;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const auto& p = spec.points[i];
    if (!ids.insert(p.id).second) parse_error("points[" + std::to_string(i) + "]: duplicate point id " + std::to_string(p.id));
    for (std::size_t j = 0; j < i; ++j)
      if (spec.points[j].coordinate == p.coordinate)
        parse_error("points[" + std::to_string(i) + "]: duplicate point coordinate " + p.coordinate.to_string());
  }
  auto known = [&](PointId id, const std::string& where) {
    if (!ids.contains(id)) parse_error(where + ": references undeclared point id " + std::to_string(id));
  };

  if (spec.series.size() != spec.points.size()) parse_error("series: expected exactly one series per point");
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    if (spec.series[i].point != spec.points[i].id)
      parse_error("series: series/point mismatch at point " + std::to_string(spec.points[i].id));
    if (spec.series[i].coefficients.empty())
      parse_error("series[" + std::to_string(i) + "]: at least one coefficient is required");
  }

  if (spec.arch_places.size() > 1) parse_error("arch_places: Q has a single archimedean place");
  for (const auto& a : spec.arch_places) {
    for (const auto& [id, comp] : a.placement) known(id, "arch_places[0].placement");
    try {
      validate_domain(a.domain);
      // arch_matrix re-checks placements; running it here surfaces them as input errors.
      (void)arch_matrix(a, spec.points, {});
    } catch (const Error& e) {
      parse_error(std::string("arch_places[0]: ") + e.what());
    }
  }
  for (std::size_t k = 0; k < spec.nonarch_places.size(); ++k) {
    const auto& place = spec.nonarch_places[k];
    const std::string where = "nonarch_places[" + std::to_string(k) + "]";
    for (const auto& [id, q] : place.log_size_coeffs) known(id, where + ".log_size_coeffs");
    for (const auto& [id, q] : place.presets) known(id, where + ".preset");
    for (const auto& [ij, c] : place.off_diagonal) {
      known(ij.first, where + ".off_diagonal");
      known(ij.second, where + ".off_diagonal");
    }
    try {
      validate_place(place);
    } catch (const Error& e) {
      parse_error(where + ": " + e.what());
    }
    for (std::size_t j = 0; j < k; ++j)
      if (spec.nonarch_places[j].prime == place.prime) parse_error(where + ": prime listed twice");
  }

  if (spec.scalings.size() != spec.points.size()) parse_error("scalings: expected one scaling per point");
  for (std::size_t i = 0; i < spec.scalings.size(); ++i) {
    if (spec.scalings[i].point != spec.points[i].id) parse_error("scalings: order does not follow points");
    if (spec.scalings[i].scalar == 0) parse_error("scalings[" + std::to_string(i) + "]: scalar must be nonzero");
  }

  for (std::size_t k = 0; k < spec.extra_matrices.size(); ++k) {
    const auto& m = spec.extra_matrices[k];
    const std::string where = "extra_matrices[" + std::to_string(k) + "]";
    if (m.entries.size() != spec.points.size()) parse_error(where + ": expected one row per point");
    for (const auto& row : m.entries)
      if (row.size() != spec.points.size()) parse_error(where + ": expected one column per point");
  }
  if (spec.degree_bound && *spec.degree_bound < 1) parse_error("degree_bound: must be a positive integer");
}

ProblemSpec parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("problem document must be a JSON object");
  reject_unknown(doc,
                 {"points", "series", "arch_places", "nonarch_places", "scalings", "degree_bound", "extra_matrices",
                  "infinite_tail"},
                 "document");

  ProblemSpec spec;
  try {
    const json& pts = require(doc, "points", "document");
    if (!pts.is_array()) field_error("points", "expected an array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string where = "points[" + std::to_string(i) + "]";
      reject_unknown(pts[i], {"id", "coordinate"}, where);
      const json& c = require(pts[i], "coordinate", where);
      if (!c.is_string() && !c.is_number_integer()) field_error(where + ".coordinate", "expected \"p/q\" or \"inf\"");
      Coordinate coord;
      try {
        coord = c.is_string() ? Coordinate::parse(c.get<std::string>()) : Coordinate(rational_field(c, where));
      } catch (const Error& e) {
        field_error(where + ".coordinate", e.what());
      }
      spec.points.push_back({id_field(require(pts[i], "id", where), where + ".id"), coord});
    }

    std::map<PointId, LocalSeries> by_point;
    const json& ser = require(doc, "series", "document");
    if (!ser.is_array()) field_error("series", "expected an array");
    for (std::size_t i = 0; i < ser.size(); ++i) {
      const std::string where = "series[" + std::to_string(i) + "]";
      reject_unknown(ser[i], {"point", "coefficients"}, where);
      LocalSeries s;
      s.point = id_field(require(ser[i], "point", where), where + ".point");
      const json& cs = require(ser[i], "coefficients", where);
      if (!cs.is_array()) field_error(where + ".coefficients", "expected an array");
      for (std::size_t k = 0; k < cs.size(); ++k)
        s.coefficients.push_back(rational_field(cs[k], where + ".coefficients[" + std::to_string(k) + "]"));
      if (!by_point.emplace(s.point, s).second) field_error(where, "second series for point " + std::to_string(s.point));
    }
    for (const auto& p : spec.points) {
      auto it = by_point.find(p.id);
      if (it == by_point.end()) parse_error("series: series/point mismatch, no series for point " + std::to_string(p.id));
      spec.series.push_back(it->second);
      by_point.erase(it);
    }
    if (!by_point.empty())
      parse_error("series: series/point mismatch, series for undeclared point " + std::to_string(by_point.begin()->first));

    if (auto it = doc.find("arch_places"); it != doc.end()) {
      if (!it->is_array()) field_error("arch_places", "expected an array");
      for (std::size_t k = 0; k < it->size(); ++k)
        spec.arch_places.push_back(arch_assignment((*it)[k], "arch_places[" + std::to_string(k) + "]"));
    }
    if (auto it = doc.find("nonarch_places"); it != doc.end()) {
      if (!it->is_array()) field_error("nonarch_places", "expected an array");
      for (std::size_t k = 0; k < it->size(); ++k)
        spec.nonarch_places.push_back(nonarch_place((*it)[k], "nonarch_places[" + std::to_string(k) + "]"));
    }

    std::map<PointId, Rational> scalars;
    if (auto it = doc.find("scalings"); it != doc.end()) {
      if (!it->is_array()) field_error("scalings", "expected an array");
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string where = "scalings[" + std::to_string(k) + "]";
        reject_unknown((*it)[k], {"point", "scalar"}, where);
        PointId id = id_field(require((*it)[k], "point", where), where + ".point");
        if (!scalars.emplace(id, rational_field(require((*it)[k], "scalar", where), where + ".scalar")).second)
          field_error(where, "duplicate scaling for point " + std::to_string(id));
      }
    }
    for (const auto& [id, a] : scalars) {
      bool declared = false;
      for (const auto& p : spec.points) declared |= p.id == id;
      if (!declared) parse_error("scalings: references undeclared point id " + std::to_string(id));
    }
    for (const auto& p : spec.points) {
      auto it = scalars.find(p.id);
      spec.scalings.push_back({p.id, it == scalars.end() ? Rational(1) : it->second});
    }

    if (auto it = doc.find("extra_matrices"); it != doc.end()) {
      if (!it->is_array()) field_error("extra_matrices", "expected an array");
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string where = "extra_matrices[" + std::to_string(k) + "]";
        const json& m = (*it)[k];
        reject_unknown(m, {"label", "entries"}, where);
        ExtraMatrix extra;
        if (auto l = m.find("label"); l != m.end()) extra.label = l->get<std::string>();
        const json& rows = require(m, "entries", where);
        if (!rows.is_array()) field_error(where + ".entries", "expected an array of rows");
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (!rows[r].is_array()) field_error(where + ".entries", "expected an array of rows");
          std::vector<ExtendedReal> row;
          for (std::size_t c = 0; c < rows[r].size(); ++c)
            row.push_back(extended_field(rows[r][c], where + ".entries[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
          extra.entries.push_back(std::move(row));
        }
        spec.extra_matrices.push_back(std::move(extra));
      }
    }
    if (auto it = doc.find("degree_bound"); it != doc.end() && !it->is_null()) {
      if (!it->is_number_integer()) field_error("degree_bound", "expected an integer");
      spec.degree_bound = it->get<int>();
    }
    if (auto it = doc.find("infinite_tail"); it != doc.end()) {
      if (!it->is_boolean()) field_error("infinite_tail", "expected a boolean");
      spec.infinite_tail = it->get<bool>();
    }
  } catch (const json::exception& e) {
    parse_error(std::string("malformed field: ") + e.what());
  }

  validate_problem(spec);
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize_problem(const ProblemSpec& spec) {
  json doc;
  json pts = json::array();
  for (const auto& p : spec.points) pts.push_back({{"id", p.id}, {"coordinate", p.coordinate.to_string()}});
  doc["points"] = pts;
  json ser = json::array();
  for (const auto& s : spec.series) {
    json cs = json::array();
    for (const auto& c : s.coefficients) cs.push_back(to_string(c));
    ser.push_back({{"point", s.point}, {"coefficients", cs}});
  }
  doc["series"] = ser;
  json arch = json::array();
  for (const auto& a : spec.arch_places) {
    json placement = json::object();
    for (const auto& [id, comp] : a.placement) placement[std::to_string(id)] = comp;
    arch.push_back({{"domain", arch_domain_json(a.domain)}, {"placement", placement}});
  }
  doc["arch_places"] = arch;
  json nonarch = json::array();
  for (const auto& p : spec.nonarch_places) nonarch.push_back(nonarch_place_json(p));
  doc["nonarch_places"] = nonarch;
  json sc = json::array();
  for (const auto& s : spec.scalings) sc.push_back({{"point", s.point}, {"scalar", to_string(s.scalar)}});
  doc["scalings"] = sc;
  if (!spec.extra_matrices.empty()) {
    json extras = json::array();
    for (const auto& m : spec.extra_matrices) {
      json rows = json::array();
      for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.is_infinite() ? json("inf") : json(e.value()));
        rows.push_back(r);
      }
      extras.push_back({{"label", m.label}, {"entries", rows}});
    }
    doc["extra_matrices"] = extras;
  }
  if (spec.degree_bound) doc["degree_bound"] = *spec.degree_bound;
  if (spec.infinite_tail) doc["infinite_tail"] = true;
  return doc.dump(2);
}

LocalSeries expand_rational_at_point(const Polynomial& num, const Polynomial& den, const MarkedPoint& point,
                                     std::size_t order) {
  if (den.is_zero()) precondition_error("zero denominator polynomial");
  LocalSeries out{point.id, std::vector<Rational>(order + 1)};
  if (num.is_zero()) return out;

  const Polynomial g = Polynomial::gcd(num, den);
  const Polynomial p = Polynomial::divmod(num, g).first;
  const Polynomial q = Polynomial::divmod(den, g).first;

  if (!point.coordinate.is_infinity()) {
    const Polynomial ps = p.shifted(point.coordinate.value());
    const Polynomial qs = q.shifted(point.coordinate.value());
    if (qs.coefficient(0) == 0) precondition_error("pole at the marked point " + point.coordinate.to_string());
    out.coefficients = series_quotient(ps, qs, order);
    return out;
  }

  // z = 1/t: p/q = t^(deg q - deg p) * rev(p)/rev(q).
  if (p.degree() > q.degree()) precondition_error("pole at the marked point inf");
  const std::size_t shift = static_cast<std::size_t>(q.degree() - p.degree());
  if (shift > order) return out;
  const auto tail = series_quotient(p.reversed(static_cast<std::size_t>(p.degree())),
                                    q.reversed(static_cast<std::size_t>(q.degree())), order - shift);
  for (std::size_t k = 0; k < tail.size(); ++k) out.coefficients[k + shift] = tail[k];
  return out;
}

}  // namespace capgame
