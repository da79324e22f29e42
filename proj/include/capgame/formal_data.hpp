#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capgame/polynomial.hpp"
#include "capgame/points.hpp"
#include "capgame/potential_arch.hpp"
#include "capgame/potential_nonarch.hpp"
#include "capgame/rational.hpp"

namespace capgame {

/// User-supplied numeric place matrix (the escape hatch for domains or curves
/// without a closed-form Green function). Indexed in point order.
struct ExtraMatrix {
  std::string label;
  std::vector<std::vector<ExtendedReal>> entries;
  friend bool operator==(const ExtraMatrix&, const ExtraMatrix&) = default;
};

/// A validated problem: marked points of P^1 over Q, one jet per point, and
/// the place data that produces the capacity matrix.
struct ProblemSpec {
  std::vector<MarkedPoint> points;
  std::vector<LocalSeries> series;                  ///< same order as `points`
  std::vector<ArchDomainAssignment> arch_places;    ///< at most one: Q has a single real place
  std::vector<NonArchPlace> nonarch_places;
  std::vector<TangentScaling> scalings;             ///< one per point, default 1
  std::vector<ExtraMatrix> extra_matrices;
  std::optional<int> degree_bound;
  bool infinite_tail = false;

  std::size_t index_of(PointId id) const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Parses and validates a problem document (JSON). Errors carry the offending
/// field path; malformed JSON reports line and column.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::string& path);

/// Canonical JSON text; parse_problem(serialize_problem(s)) == s.
std::string serialize_problem(const ProblemSpec& spec);

/// Checks every ProblemSpec invariant; throws Error(parse) on violation.
void validate_problem(const ProblemSpec& spec);

/// Exact jet of num/den in the local parameter at `point`, to t^order.
/// Common factors are cancelled first, so only genuine poles are rejected.
LocalSeries expand_rational_at_point(const Polynomial& num, const Polynomial& den, const MarkedPoint& point,
                                     std::size_t order);

}  // namespace capgame
