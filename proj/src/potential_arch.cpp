#include "capgame/potential_arch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "capgame/error.hpp"

namespace capgame {

namespace {

using cplx = std::complex<double>;

/// A point of P^1 in floating point.
struct Loc {
  bool infinite = false;
  cplx z{};
};

Loc to_loc(const Coordinate& c) { return c.is_infinity() ? Loc{true, {}} : Loc{false, {c.value().get_d(), 0.0}}; }

constexpr double kClosureSlack = 1e-12;

/// Each simple domain is mapped conformally onto the unit disk (Disk) or the
/// exterior of the unit disk (ExteriorDisk, IntervalComplement); the Green
/// function of both pictures is log|1 - conj(W) U| - log|U - W|.
struct UnitPicture {
  const SimpleDomain& domain;

  Loc map(const Loc& p) const {
    return std::visit(
        [&](const auto& d) -> Loc {
          using D = std::decay_t<decltype(d)>;
          if (p.infinite) return Loc{true, {}};  // Disk never contains infinity; callers check membership first
          if constexpr (std::is_same_v<D, IntervalComplement>) {
            return Loc{false, joukowski_inverse(d, p.z)};
          } else {
            return Loc{false, (p.z - d.center.get_d()) / d.radius.get_d()};
          }
        },
        domain);
  }

  static cplx joukowski_inverse(const IntervalComplement& d, cplx z) {
    const double a = d.a.get_d(), b = d.b.get_d();
    const cplx phi = (2.0 * z - a - b) / (b - a);
    const cplx s = std::sqrt(phi - 1.0) * std::sqrt(phi + 1.0);
    const cplx plus = phi + s, minus = phi - s;
    return std::abs(plus) >= std::abs(minus) ? plus : minus;
  }

  /// dU/dz at a finite point.
  cplx derivative(cplx w) const {
    return std::visit(
        [&](const auto& d) -> cplx {
          using D = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<D, IntervalComplement>) {
            const double a = d.a.get_d(), b = d.b.get_d();
            const cplx phi = (2.0 * w - a - b) / (b - a);
            const cplx psi = joukowski_inverse(d, w);
            return (2.0 / (b - a)) * psi / (psi - phi);
          } else {
            return cplx(1.0 / d.radius.get_d(), 0.0);
          }
        },
        domain);
  }

  /// log|kappa| where U ~ kappa z at infinity (only for domains containing infinity).
  double log_kappa_at_infinity() const {
    return std::visit(
        [&](const auto& d) -> double {
          using D = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<D, IntervalComplement>) {
            return std::log(4.0 / Rational(d.b - d.a).get_d());
          } else {
            return -std::log(d.radius.get_d());
          }
        },
        domain);
  }
};

double unit_green(const Loc& u, const Loc& w) {
  if (w.infinite) return std::log(std::abs(u.z));
  if (u.infinite) return std::log(std::abs(w.z));
  return std::log(std::abs(1.0 - std::conj(w.z) * u.z)) - std::log(std::abs(u.z - w.z));
}

bool contains_infinity(const SimpleDomain& d) { return !std::holds_alternative<Disk>(d); }

/// Exact strict membership for rational points.
bool strictly_inside(const SimpleDomain& domain, const Coordinate& p) {
  return std::visit(
      [&](const auto& d) -> bool {
        using D = std::decay_t<decltype(d)>;
        if (p.is_infinity()) return contains_infinity(domain);
        const Rational& x = p.value();
        if constexpr (std::is_same_v<D, Disk>) {
          Rational off = x - d.center;
          return off * off < d.radius * d.radius;
        } else if constexpr (std::is_same_v<D, ExteriorDisk>) {
          Rational off = x - d.center;
          return off * off > d.radius * d.radius;
        } else {
          return x < d.a || x > d.b;
        }
      },
      domain);
}

bool in_closure(const SimpleDomain& domain, const Loc& p) {
  return std::visit(
      [&](const auto& d) -> bool {
        using D = std::decay_t<decltype(d)>;
        if (p.infinite) return contains_infinity(domain);
        if constexpr (std::is_same_v<D, Disk>) {
          const double r = d.radius.get_d();
          return std::abs(p.z - d.center.get_d()) <= r * (1 + kClosureSlack);
        } else if constexpr (std::is_same_v<D, ExteriorDisk>) {
          const double r = d.radius.get_d();
          return std::abs(p.z - d.center.get_d()) >= r * (1 - kClosureSlack);
        } else {
          return true;  // the slit itself is the boundary
        }
      },
      domain);
}

std::size_t component_of_pole(const std::vector<SimpleDomain>& comps, const Coordinate& pole) {
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (strictly_inside(comps[k], pole)) return k;
  precondition_error("pole " + pole.to_string() + " is not strictly inside the domain");
}

/// Green value with both arguments in floating point; pole component already known.
double green_in_component(const SimpleDomain& comp, const Loc& pole, const Loc& z) {
  if (pole.infinite == z.infinite && (pole.infinite || z.z == pole.z)) precondition_error("green evaluated at its pole");
  const UnitPicture pic{comp};
  return std::max(0.0, unit_green(pic.map(z), pic.map(pole)));
}

double green_loc(const ArchDomain& domain, const Coordinate& pole, const Loc& z) {
  validate_domain(domain);
  const auto comps = components(domain);
  const std::size_t k = component_of_pole(comps, pole);
  if (in_closure(comps[k], z)) {
    // A point in the closure of the pole's component may still sit inside another
    // component only if closures meet, which validate_domain excludes.
    return green_in_component(comps[k], to_loc(pole), z);
  }
  for (std::size_t j = 0; j < comps.size(); ++j)
    if (j != k && in_closure(comps[j], z)) return 0.0;
  precondition_error("green evaluated outside the closure of the domain");
}

// Near the pole U - W ~ U'(w) t, so g + log|t| -> log(||W|^2 - 1|) - log|U'(w)|.
double robin_in_component(const SimpleDomain& comp, const Coordinate& pole) {
  const UnitPicture pic{comp};
  if (pole.is_infinity()) return pic.log_kappa_at_infinity();
  const Loc w = pic.map(to_loc(pole));
  return std::log(std::abs(std::norm(w.z) - 1.0)) - std::log(std::abs(pic.derivative(to_loc(pole).z)));
}

Rational abs_q(const Rational& r) { return r < 0 ? Rational(-r) : r; }

bool closures_disjoint(const SimpleDomain& x, const SimpleDomain& y) {
  if (std::holds_alternative<IntervalComplement>(x) || std::holds_alternative<IntervalComplement>(y)) return false;
  if (std::holds_alternative<ExteriorDisk>(x) && std::holds_alternative<ExteriorDisk>(y)) return false;
  if (std::holds_alternative<Disk>(x) && std::holds_alternative<Disk>(y)) {
    const auto& a = std::get<Disk>(x);
    const auto& b = std::get<Disk>(y);
    return abs_q(a.center - b.center) > a.radius + b.radius;
  }
  const Disk& d = std::holds_alternative<Disk>(x) ? std::get<Disk>(x) : std::get<Disk>(y);
  const ExteriorDisk& e = std::holds_alternative<ExteriorDisk>(x) ? std::get<ExteriorDisk>(x) : std::get<ExteriorDisk>(y);
  return abs_q(d.center - e.center) + d.radius < e.radius;
}

void validate_simple(const SimpleDomain& domain) {
  std::visit(
      [](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, IntervalComplement>) {
          if (!(d.a < d.b)) precondition_error("interval complement requires a < b");
        } else {
          if (d.radius <= 0) precondition_error("disk radius must be positive");
        }
      },
      domain);
}

}  // namespace

std::vector<SimpleDomain> components(const ArchDomain& domain) {
  return std::visit(
      [](const auto& d) -> std::vector<SimpleDomain> {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, DisjointUnion>)
          return d.components;
        else
          return {SimpleDomain(d)};
      },
      domain);
}

void validate_domain(const ArchDomain& domain) {
  const auto comps = components(domain);
  if (comps.empty()) precondition_error("empty disjoint union");
  for (const auto& c : comps) validate_simple(c);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (!closures_disjoint(comps[i], comps[j]))
        precondition_error("union components " + std::to_string(i) + " and " + std::to_string(j) +
                           " have intersecting closures");
}

double green(const ArchDomain& domain, const Coordinate& pole, std::complex<double> z) {
  return green_loc(domain, pole, Loc{false, z});
}

double green(const ArchDomain& domain, const Coordinate& pole, const Coordinate& z) {
  return green_loc(domain, pole, to_loc(z));
}

double robin_constant(const ArchDomain& domain, const Coordinate& pole) {
  validate_domain(domain);
  const auto comps = components(domain);
  return robin_in_component(comps[component_of_pole(comps, pole)], pole);
}

RealMatrix arch_matrix(const ArchDomainAssignment& assignment, std::span<const MarkedPoint> points,
                       const std::vector<TangentScaling>& scalings) {
  validate_domain(assignment.domain);
  const auto comps = components(assignment.domain);
  const std::size_t n = points.size();
  std::vector<std::size_t> comp_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = assignment.placement.find(points[i].id);
    if (it == assignment.placement.end())
      precondition_error("point " + std::to_string(points[i].id) + " has no archimedean placement");
    if (it->second >= comps.size())
      precondition_error("point " + std::to_string(points[i].id) + " placed in a nonexistent component");
    if (!strictly_inside(comps[it->second], points[i].coordinate))
      precondition_error("point " + std::to_string(points[i].id) + " does not lie inside its component");
    comp_of[i] = it->second;
  }

  RealMatrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const SimpleDomain& comp = comps[comp_of[i]];
    m[i][i] = robin_in_component(comp, points[i].coordinate) - log_abs(scaling_for(scalings, points[i].id));
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || comp_of[j] != comp_of[i]) continue;
      m[i][j] = green_in_component(comp, to_loc(points[i].coordinate), to_loc(points[j].coordinate));
    }
  }
  return m;
}

GreenDiagnostics validate_green(const ArchDomain& domain, const Coordinate& pole, double h, double tolerance) {
  validate_domain(domain);
  const auto comps = components(domain);
  const SimpleDomain& comp = comps[component_of_pole(comps, pole)];
  const Loc pole_loc = to_loc(pole);

  GreenDiagnostics report;
  report.exclusion_radius = std::max(2.0 * h, 1.25 * std::pow(h * h / tolerance, 0.25));
  const double excl = report.exclusion_radius;

  // Sampling box, singular points (pole and its reflection) and slit.
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  std::vector<cplx> singular;
  std::optional<std::pair<double, double>> slit;
  std::vector<cplx> boundary;
  constexpr int kBoundarySamples = 720;

  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, IntervalComplement>) {
          const double a = d.a.get_d(), b = d.b.get_d();
          const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
          double reach = 3 * half;
          if (!pole_loc.infinite) reach = std::max(reach, std::abs(pole_loc.z.real() - mid) + half);
          x0 = mid - reach, x1 = mid + reach, y0 = -reach, y1 = reach;
          slit = std::make_pair(a, b);
          for (int k = 0; k <= kBoundarySamples; ++k) boundary.emplace_back(a + (b - a) * k / kBoundarySamples, 0.0);
        } else {
          const double c = d.center.get_d(), r = d.radius.get_d();
          double reach = std::is_same_v<D, Disk> ? r : 3 * r;
          if (!pole_loc.infinite) reach = std::max(reach, std::abs(pole_loc.z.real() - c) + r);
          x0 = c - reach, x1 = c + reach, y0 = -reach, y1 = reach;
          if (!pole_loc.infinite) {
            const cplx off = pole_loc.z - c;
            if (std::abs(off) > 0) singular.push_back(c + r * r / std::conj(off));
          }
          for (int k = 0; k < kBoundarySamples; ++k) {
            const double th = 2 * std::numbers::pi * k / kBoundarySamples;
            boundary.push_back(c + r * std::polar(1.0, th));
          }
        }
      },
      comp);
  if (!pole_loc.infinite) singular.push_back(pole_loc.z);

  for (const cplx& b : boundary) {
    const double g = green_in_component(comp, pole_loc, Loc{false, b});
    report.boundary_residual = std::max(report.boundary_residual, std::abs(g));
  }
  report.boundary_samples = boundary.size();

  double disk_c = 0, disk_r = 0;
  if (const auto* d = std::get_if<Disk>(&comp)) disk_c = d->center.get_d(), disk_r = d->radius.get_d();
  if (const auto* d = std::get_if<ExteriorDisk>(&comp)) disk_c = d->center.get_d(), disk_r = d->radius.get_d();
  auto interior = [&](cplx z) {
    if (slit) return !(z.imag() == 0 && z.real() >= slit->first && z.real() <= slit->second);
    const double dist = std::abs(z - disk_c);
    return std::holds_alternative<Disk>(comp) ? dist < disk_r : dist > disk_r;
  };
  auto far_from_singularities = [&](cplx z) {
    for (const cplx& s : singular)
      if (std::abs(z - s) < excl) return false;
    if (slit) {
      const double x = std::clamp(z.real(), slit->first, slit->second);
      if (std::abs(z - cplx(x, 0.0)) < excl) return false;
    }
    return true;
  };

  const long nx = static_cast<long>(std::floor((x1 - x0) / h)) + 1;
  const long ny = static_cast<long>(std::floor((y1 - y0) / h)) + 1;
  // Cache g on the grid; NaN marks points outside the open domain or at the pole.
  std::vector<double> g(static_cast<std::size_t>(nx * ny), std::nan(""));
  auto at = [&](long i, long j) -> double& { return g[static_cast<std::size_t>(j * nx + i)]; };
  report.min_interior = std::numeric_limits<double>::infinity();
  for (long j = 0; j < ny; ++j)
    for (long i = 0; i < nx; ++i) {
      const cplx z(x0 + i * h, y0 + j * h);
      if (!interior(z)) continue;
      if (!pole_loc.infinite && std::abs(z - pole_loc.z) < 1e-14) continue;
      const double v = green_in_component(comp, pole_loc, Loc{false, z});
      at(i, j) = v;
      report.min_interior = std::min(report.min_interior, v);
      ++report.interior_samples;
    }
  if (report.interior_samples == 0) report.min_interior = 0;

  for (long j = 1; j + 1 < ny; ++j)
    for (long i = 1; i + 1 < nx; ++i) {
      const double c = at(i, j), e = at(i + 1, j), w = at(i - 1, j), n = at(i, j + 1), s = at(i, j - 1);
      if (std::isnan(c) || std::isnan(e) || std::isnan(w) || std::isnan(n) || std::isnan(s)) continue;
      const cplx z(x0 + i * h, y0 + j * h);
      if (!far_from_singularities(z)) continue;
      // Keep the stencil off the boundary, where the closed form stops being harmonic.
      bool ok = true;
      for (cplx q : {z + h, z - h, z + cplx(0, h), z - cplx(0, h)})
        if (!interior(q)) ok = false;
      if (!ok) continue;
      const double lap = (e + w + n + s - 4 * c) / (h * h);
      report.laplacian_residual = std::max(report.laplacian_residual, std::abs(lap));
      ++report.laplacian_samples;
    }
  report.within_tolerance = report.laplacian_residual < tolerance;
  return report;
}

}  // namespace capgame
