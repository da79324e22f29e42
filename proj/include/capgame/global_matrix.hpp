#pragma once

#include <string>
#include <variant>
#include <vector>

#include "capgame/formal_data.hpp"
#include "capgame/potential_arch.hpp"
#include "capgame/potential_nonarch.hpp"

namespace capgame {

/// Global capacity matrix G = sum over places of G^v. Off-diagonal entries lie
/// in [0, +inf]; the diagonal is finite.
struct GameMatrix {
  std::vector<std::vector<ExtendedReal>> entries;
  std::vector<std::string> places;    ///< provenance, one label per contribution
  std::vector<std::string> warnings;  ///< e.g. asymmetric user-supplied data

  std::size_t size() const noexcept { return entries.size(); }
  const ExtendedReal& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

/// Builds a GameMatrix directly from entries, checking its invariants.
GameMatrix make_game_matrix(std::vector<std::vector<ExtendedReal>> entries);

/// Per-place matrix before assembly. The real place holds floating-point
/// entries; a prime place holds exact coefficients of log p.
struct PlaceMatrix {
  std::variant<RealMatrix, NonArchMatrix> data;
  std::string label;
};

PlaceMatrix arch_place_matrix(RealMatrix m);
PlaceMatrix nonarch_place_matrix(NonArchMatrix m);

/// Entrywise sum with +inf absorbing. Exact parts are converted to floating point
/// last. Throws Error(computation) on an infinite diagonal, a negative
/// off-diagonal entry (beyond 1e-9), or asymmetric closed-form contributions;
/// asymmetric user matrices only produce a warning.
GameMatrix assemble(const std::vector<RealMatrix>& arch, const std::vector<NonArchMatrix>& nonarch,
                    const std::vector<ExtraMatrix>& extra = {});

/// Shifts every diagonal entry by -log|a_i|_v at its place: -log|a_i| at the real
/// place, +v_p(a_i) (in units of log p) at a prime place. Off-diagonal entries are
/// untouched. Throws Error(precondition) on a zero scalar.
std::vector<PlaceMatrix> gauge_shift(std::vector<PlaceMatrix> places, const std::vector<Rational>& scalars);

/// Sum of place matrices (order-independent) into a GameMatrix.
GameMatrix assemble(const std::vector<PlaceMatrix>& places);

/// Adds zero-valued prime places so that every prime dividing some scalar has a
/// matrix; the product formula only holds over the full support.
std::vector<PlaceMatrix> complete_support(std::vector<PlaceMatrix> places, const std::vector<Rational>& scalars);

/// True iff the digraph i -> j (i != j, G_ij > 0) is strongly connected.
bool irreducibility(const GameMatrix& g);

/// All per-place matrices of a problem, scalings applied.
std::vector<PlaceMatrix> place_matrices(const ProblemSpec& spec);

/// G for a problem: place matrices plus user-supplied extra matrices.
GameMatrix global_matrix(const ProblemSpec& spec);

}  // namespace capgame
