#include "capgame/global_matrix.hpp"

#include <cmath>
#include <set>

#include "capgame/error.hpp"

namespace capgame {

namespace {

constexpr double kTolerance = 1e-9;

bool asymmetric(const std::vector<std::vector<ExtendedReal>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const auto &a = m[i][j], &b = m[j][i];
      if (a.is_infinite() != b.is_infinite()) return true;
      if (a.is_finite() && std::abs(a.value() - b.value()) > kTolerance * (1 + std::abs(a.value()) + std::abs(b.value())))
        return true;
    }
  return false;
}

void check_invariants(const std::vector<std::vector<ExtendedReal>>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) precondition_error("game matrix must be square");
    if (m[i][i].is_infinite()) computation_error("infinite diagonal entry at index " + std::to_string(i));
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      if (m[i][j].is_finite() && m[i][j].value() < -kTolerance)
        computation_error("negative off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

std::vector<std::vector<ExtendedReal>> zeros(std::size_t n) {
  return std::vector<std::vector<ExtendedReal>>(n, std::vector<ExtendedReal>(n, ExtendedReal(0.0)));
}

std::size_t matrix_size(const PlaceMatrix& p) {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RealMatrix>)
          return m.size();
        else
          return m.coeffs.size();
      },
      p.data);
}

}  // namespace

GameMatrix make_game_matrix(std::vector<std::vector<ExtendedReal>> entries) {
  check_invariants(entries);
  GameMatrix g;
  g.entries = std::move(entries);
  return g;
}

PlaceMatrix arch_place_matrix(RealMatrix m) { return {std::move(m), "arch"}; }

PlaceMatrix nonarch_place_matrix(NonArchMatrix m) {
  std::string label = "p=" + std::to_string(m.prime);
  return {std::move(m), std::move(label)};
}

GameMatrix assemble(const std::vector<PlaceMatrix>& places) {
  std::vector<RealMatrix> arch;
  std::vector<NonArchMatrix> nonarch;
  for (const auto& p : places) {
    if (const auto* r = std::get_if<RealMatrix>(&p.data))
      arch.push_back(*r);
    else
      nonarch.push_back(std::get<NonArchMatrix>(p.data));
  }
  return assemble(arch, nonarch);
}

GameMatrix assemble(const std::vector<RealMatrix>& arch, const std::vector<NonArchMatrix>& nonarch,
                    const std::vector<ExtraMatrix>& extra) {
  std::size_t n = 0;
  bool sized = false;
  auto take_size = [&](std::size_t s) {
    if (!sized) {
      n = s;
      sized = true;
    } else if (s != n) {
      precondition_error("place matrices do not share an index set");
    }
  };
  for (const auto& m : arch) take_size(m.size());
  for (const auto& m : nonarch) take_size(m.coeffs.size());
  for (const auto& m : extra) take_size(m.entries.size());

  GameMatrix g;
  auto total = zeros(n);

  for (const auto& m : arch) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n) precondition_error("arch matrix must be square");
      for (std::size_t j = 0; j < n; ++j) total[i][j] = total[i][j] + ExtendedReal(m[i][j]);
    }
    g.places.push_back("arch");
  }

  // Exact nonarch parts: sum the log-combinations per entry, convert once.
  std::vector<std::vector<LogCombination>> exact(n, std::vector<LogCombination>(n));
  for (const auto& m : nonarch) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m.coeffs[i].size() != n) precondition_error("nonarch matrix must be square");
      for (std::size_t j = 0; j < n; ++j) exact[i][j].add(m.prime, m.coeffs[i][j]);
    }
    g.places.push_back("p=" + std::to_string(m.prime));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total[i][j] = total[i][j] + ExtendedReal(exact[i][j].to_double());

  if (asymmetric(total)) computation_error("assembled place matrices are not symmetric");

  for (const auto& m : extra) {
    for (const auto& row : m.entries)
      if (row.size() != n) precondition_error("extra matrix must be square");
    if (asymmetric(m.entries))
      g.warnings.push_back("user matrix '" + m.label + "' is not symmetric");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total[i][j] = total[i][j] + m.entries[i][j];
    g.places.push_back(m.label.empty() ? std::string("extra") : "extra:" + m.label);
  }

  check_invariants(total);
  g.entries = std::move(total);
  return g;
}

std::vector<PlaceMatrix> gauge_shift(std::vector<PlaceMatrix> places, const std::vector<Rational>& scalars) {
  for (const auto& a : scalars)
    if (a == 0) precondition_error("gauge scalar must be nonzero");
  for (auto& p : places) {
    if (matrix_size(p) != scalars.size()) precondition_error("gauge scalars do not match the index set");
    if (auto* r = std::get_if<RealMatrix>(&p.data)) {
      for (std::size_t i = 0; i < scalars.size(); ++i) (*r)[i][i] -= log_abs(scalars[i]);
    } else {
      auto& m = std::get<NonArchMatrix>(p.data);
      for (std::size_t i = 0; i < scalars.size(); ++i) m.coeffs[i][i] += valuation(scalars[i], m.prime);
    }
  }
  return places;
}

std::vector<PlaceMatrix> complete_support(std::vector<PlaceMatrix> places, const std::vector<Rational>& scalars) {
  std::set<long> present;
  std::size_t n = scalars.size();
  for (const auto& p : places) {
    if (const auto* m = std::get_if<NonArchMatrix>(&p.data)) present.insert(m->prime);
  }
  std::set<long> needed;
  for (const auto& a : scalars) {
    if (a == 0) precondition_error("gauge scalar must be nonzero");
    for (long p : prime_support(a)) needed.insert(p);
  }
  for (long p : needed) {
    if (present.contains(p)) continue;
    NonArchMatrix zero{p, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n))};
    places.push_back(nonarch_place_matrix(std::move(zero)));
  }
  return places;
}

bool irreducibility(const GameMatrix& g) {
  const std::size_t n = g.size();
  if (n <= 1) return true;
  auto edge = [&](std::size_t i, std::size_t j) {
    return i != j && (g(i, j).is_infinite() || g(i, j).value() > 0);
  };
  auto reaches_all = [&](bool reverse) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (!seen[v] && (reverse ? edge(v, u) : edge(u, v))) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return reaches_all(false) && reaches_all(true);
}

std::vector<PlaceMatrix> place_matrices(const ProblemSpec& spec) {
  std::vector<PlaceMatrix> out;
  for (const auto& a : spec.arch_places) out.push_back(arch_place_matrix(arch_matrix(a, spec.points, spec.scalings)));
  for (const auto& p : spec.nonarch_places)
    out.push_back(nonarch_place_matrix(nonarch_matrix(p, spec.points, spec.scalings)));
  return out;
}

GameMatrix global_matrix(const ProblemSpec& spec) {
  std::vector<RealMatrix> arch;
  std::vector<NonArchMatrix> nonarch;
  for (const auto& a : spec.arch_places) arch.push_back(arch_matrix(a, spec.points, spec.scalings));
  for (const auto& p : spec.nonarch_places) nonarch.push_back(nonarch_matrix(p, spec.points, spec.scalings));
  // A bare prime with scalings but no declared place still contributes v_p(a_i) log p.
  std::set<long> declared;
  for (const auto& p : spec.nonarch_places) declared.insert(p.prime);
  std::set<long> implied;
  for (const auto& s : spec.scalings)
    for (long p : prime_support(s.scalar))
      if (!declared.contains(p)) implied.insert(p);
  for (long p : implied) nonarch.push_back(nonarch_matrix(NonArchPlace{p, {}, {}, {}}, spec.points, spec.scalings));
  if (arch.empty() && nonarch.empty() && spec.extra_matrices.empty())
    precondition_error("problem has no place data");
  return assemble(arch, nonarch, spec.extra_matrices);
}

}  // namespace capgame
