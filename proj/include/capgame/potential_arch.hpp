#pragma once

#include <complex>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "capgame/points.hpp"

namespace capgame {

/// Open disk |z - center| < radius.
struct Disk {
  Rational center;
  Rational radius;
  friend bool operator==(const Disk&, const Disk&) = default;
};

/// |z - center| > radius together with infinity.
struct ExteriorDisk {
  Rational center;
  Rational radius;
  friend bool operator==(const ExteriorDisk&, const ExteriorDisk&) = default;
};

/// P^1 minus the real segment [a, b].
struct IntervalComplement {
  Rational a;
  Rational b;
  friend bool operator==(const IntervalComplement&, const IntervalComplement&) = default;
};

using SimpleDomain = std::variant<Disk, ExteriorDisk, IntervalComplement>;

struct DisjointUnion {
  std::vector<SimpleDomain> components;
  friend bool operator==(const DisjointUnion&, const DisjointUnion&) = default;
};

/// Real (conjugation-stable) domain in P^1 with a closed-form Green function.
using ArchDomain = std::variant<Disk, ExteriorDisk, IntervalComplement, DisjointUnion>;

/// Throws Error(precondition) on nonpositive radii, a >= b, or a union whose
/// components' closures meet.
void validate_domain(const ArchDomain& domain);

/// Components in order; a simple domain is its own single component.
std::vector<SimpleDomain> components(const ArchDomain& domain);

struct ArchDomainAssignment {
  ArchDomain domain;
  std::map<PointId, std::size_t> placement;  ///< point id -> component index
  friend bool operator==(const ArchDomainAssignment&, const ArchDomainAssignment&) = default;
};

/// g_{domain,pole}(z). The pole must lie strictly inside the domain and z in
/// its closure, z != pole. Zero when z lies in a different component.
double green(const ArchDomain& domain, const Coordinate& pole, std::complex<double> z);
/// Same, with z allowed to be a rational point including infinity.
double green(const ArchDomain& domain, const Coordinate& pole, const Coordinate& z);

/// lim_{z -> pole} g(z) + log|t(z)| in the canonical local parameter.
double robin_constant(const ArchDomain& domain, const Coordinate& pole);

using RealMatrix = std::vector<std::vector<double>>;

/// Archimedean matrix: g_{z_i}(z_j) off the diagonal, Robin constants minus
/// log|a_i| on the diagonal.
RealMatrix arch_matrix(const ArchDomainAssignment& assignment, std::span<const MarkedPoint> points,
                       const std::vector<TangentScaling>& scalings);

struct GreenDiagnostics {
  double laplacian_residual = 0;  ///< max |5-point Laplacian| over retained grid points
  double boundary_residual = 0;   ///< max |g| on boundary samples
  double min_interior = 0;        ///< min g over interior grid points
  double exclusion_radius = 0;    ///< grid points this close to a singularity are skipped
  std::size_t interior_samples = 0;
  std::size_t laplacian_samples = 0;
  std::size_t boundary_samples = 0;
  bool within_tolerance = false;  ///< laplacian_residual < tolerance
};

/// Numerical harmonicity/boundary oracle for the closed forms on a grid of step h.
/// Stencils closer than (h^2/tolerance)^{1/4} (times a safety factor) to the pole, its
/// reflection, or a slit are skipped: the 5-point truncation error there exceeds the
/// tolerance for any harmonic function with a log singularity.
GreenDiagnostics validate_green(const ArchDomain& domain, const Coordinate& pole, double h, double tolerance);

}  // namespace capgame
