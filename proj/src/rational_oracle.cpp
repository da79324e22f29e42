#include "capgame/rational_oracle.hpp"

#include <algorithm>

#include "capgame/error.hpp"
#include "capgame/formal_data.hpp"
#include "capgame/linalg.hpp"

namespace capgame {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) precondition_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial{};
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num, den);
  num_ = Polynomial::divmod(num, g).first;
  den_ = Polynomial::divmod(den, g).first;
  const Rational lead = 1 / den_.leading();
  num_ = lead * num_;
  den_ = lead * den_;
}

std::vector<Rational> hankel_profile(const LocalSeries& series, std::size_t max_order) {
  if (series.order() < static_cast<long>(2 * max_order))
    precondition_error("insufficient truncation for Hankel determinants of order " + std::to_string(max_order));
  std::vector<Rational> out;
  for (std::size_t n = 0; n <= max_order; ++n) {
    RationalMatrix h = zero_matrix(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) h[i][j] = series.coefficients[i + j];
    out.push_back(determinant(std::move(h)));
  }
  return out;
}

namespace {

bool matches(const LocalSeries& jet, const LocalSeries& expansion) {
  return jet.coefficients == expansion.coefficients;
}

/// Expansion of p/q at `point`, or nullopt at a pole.
std::optional<LocalSeries> try_expand(const RationalFunction& f, const MarkedPoint& point, std::size_t order) {
  try {
    return expand_rational_at_point(f.numerator(), f.denominator(), point, order);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::precondition) return std::nullopt;
    throw;
  }
}

}  // namespace

std::optional<RationalFunction> pade(const LocalSeries& series, std::size_t d_num, std::size_t d_den) {
  if (series.order() < static_cast<long>(d_num + d_den))
    precondition_error("insufficient truncation for a [" + std::to_string(d_num) + "/" + std::to_string(d_den) +
                       "] Pade approximant");
  const auto& c = series.coefficients;
  auto coeff = [&](long k) { return k < 0 ? Rational(0) : c[static_cast<std::size_t>(k)]; };

  // Denominator q_0..q_n: coefficients of t^{m+1..m+n} in q f vanish.
  RationalMatrix sys;
  for (std::size_t r = d_num + 1; r <= d_num + d_den; ++r) {
    std::vector<Rational> row(d_den + 1);
    for (std::size_t j = 0; j <= d_den; ++j) row[j] = coeff(static_cast<long>(r) - static_cast<long>(j));
    sys.push_back(std::move(row));
  }
  const auto kernel = nullspace(sys, d_den + 1);
  if (kernel.empty()) return std::nullopt;
  const Polynomial q(kernel.front());
  std::vector<Rational> pc(d_num + 1);
  for (std::size_t k = 0; k <= d_num; ++k)
    for (std::size_t j = 0; j <= std::min(k, d_den); ++j) pc[k] += q.coefficient(j) * coeff(static_cast<long>(k - j));
  RationalFunction f(Polynomial(std::move(pc)), q);

  const MarkedPoint base{series.point, Coordinate(Rational(0))};
  auto expansion = try_expand(f, base, static_cast<std::size_t>(series.order()));
  if (!expansion || !matches(series, *expansion)) return std::nullopt;
  return f;
}

std::optional<RationalFunction> multipoint_reconstruct(std::span<const MarkedPoint> points,
                                                       std::span<const LocalSeries> jets, std::size_t d) {
  if (points.size() != jets.size()) precondition_error("one jet per marked point");
  std::size_t conditions = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (jets[i].order() < 0) precondition_error("empty jet");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i].coordinate == points[j].coordinate) precondition_error("jets at coincident points");
    conditions += static_cast<std::size_t>(jets[i].order() + 1);
  }
  if (conditions < 2 * d + 2)
    precondition_error("insufficient total jet order for degree " + std::to_string(d));

  bool all_zero = true;
  for (const auto& jet : jets)
    for (const auto& c : jet.coefficients) all_zero &= c == 0;
  if (all_zero) return RationalFunction(Polynomial{}, Polynomial::constant(1));

  // Unknowns: p_0..p_d, q_0..q_d. At a finite point c, q(c+t) f(t) - p(c+t) = O(t^{M+1});
  // at infinity the same with the homogenized t^d p(1/t), t^d q(1/t).
  const std::size_t width = 2 * d + 2;
  RationalMatrix sys;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& f = jets[i].coefficients;
    const std::size_t order = f.size() - 1;
    // local[k][r]: coefficient of t^r in the local form of z^k.
    std::vector<std::vector<Rational>> local(d + 1, std::vector<Rational>(order + 1));
    for (std::size_t k = 0; k <= d; ++k) {
      if (points[i].coordinate.is_infinity()) {
        if (d - k <= order) local[k][d - k] = 1;
      } else {
        const Polynomial mono = Polynomial::monomial(Rational(1), k).shifted(points[i].coordinate.value());
        for (std::size_t r = 0; r <= order; ++r) local[k][r] = mono.coefficient(r);
      }
    }
    for (std::size_t r = 0; r <= order; ++r) {
      std::vector<Rational> row(width);
      for (std::size_t k = 0; k <= d; ++k) {
        row[k] = -local[k][r];
        Rational acc(0);
        for (std::size_t s = 0; s <= r; ++s)
          if (local[k][s] != 0) acc += local[k][s] * f[r - s];
        row[d + 1 + k] = acc;
      }
      sys.push_back(std::move(row));
    }
  }

  const auto kernel = nullspace(std::move(sys), width);
  for (const auto& v : kernel) {
    Polynomial p(std::vector<Rational>(v.begin(), v.begin() + static_cast<long>(d + 1)));
    Polynomial q(std::vector<Rational>(v.begin() + static_cast<long>(d + 1), v.end()));
    if (q.is_zero()) continue;
    RationalFunction cand(std::move(p), std::move(q));
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; ++i) {
      auto e = try_expand(cand, points[i], static_cast<std::size_t>(jets[i].order()));
      ok = e && matches(jets[i], *e);
    }
    if (ok) return cand;
  }
  return std::nullopt;
}

std::size_t degree_search_cap(std::span<const LocalSeries> jets) {
  std::size_t conditions = 0;
  for (const auto& j : jets) conditions += static_cast<std::size_t>(std::max(j.order() + 1, 0L));
  return conditions < 2 ? 0 : (conditions - 2) / 2;
}

OracleResult search_rational(std::span<const MarkedPoint> points, std::span<const LocalSeries> jets,
                             std::optional<std::size_t> cap) {
  OracleResult out;
  std::size_t limit = degree_search_cap(jets);
  if (cap) limit = std::min(limit, *cap);
  out.search_cap = limit;
  for (std::size_t d = 0; d <= limit; ++d) {
    if (auto f = multipoint_reconstruct(points, jets, d)) {
      out.function = std::move(f);
      out.degree = d;
      for (const auto& j : jets) out.verified_orders[j.point] = j.order();
      break;
    }
  }
  return out;
}

}  // namespace capgame
