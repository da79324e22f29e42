#include "capgame/scheduler.hpp"

#include <limits>

#include "capgame/error.hpp"

namespace capgame {

namespace {

/// a_i = numer_i / denom with a common denominator.
struct ScaledFrequencies {
  Integer denom;
  std::vector<Integer> numer;
};

ScaledFrequencies scale(const std::vector<Rational>& a) {
  ScaledFrequencies s{Integer(1), {}};
  for (const auto& x : a) mpz_lcm(s.denom.get_mpz_t(), s.denom.get_mpz_t(), x.get_den_mpz_t());
  for (const auto& x : a) s.numer.push_back(x.get_num() * (s.denom / x.get_den()));
  return s;
}

void validate_frequencies(const std::vector<Rational>& a, std::size_t ids) {
  if (a.empty()) precondition_error("schedule needs at least one point");
  if (ids != a.size()) precondition_error("schedule ids do not match the frequency vector");
  Rational sum(0);
  for (const auto& x : a) {
    if (x <= 0) precondition_error("schedule frequencies must be strictly positive");
    sum += x;
  }
  if (sum != 1) precondition_error("schedule frequencies must sum to 1");
}

/// True when D*K and every numer_i*K fit comfortably in 64 bits, so the scaled
/// deviations D*omega_i(k) - k*numer_i can be tracked in __int128 without overflow.
bool fits_fast(const ScaledFrequencies& s, std::size_t horizon) {
  const Integer limit = Integer(1) << 62;
  const Integer k = Integer(static_cast<unsigned long>(horizon) + 1);
  return s.denom * k < limit;
}

template <class Int>
Int from_mpz(const Integer& v) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return v;
  } else {
    return static_cast<Int>(v.get_si());
  }
}

template <class Int>
std::vector<std::size_t> greedy(const ScaledFrequencies& s, std::size_t horizon, const std::vector<PointId>& ids) {
  const std::size_t n = s.numer.size();
  std::vector<Int> numer(n);
  for (std::size_t i = 0; i < n; ++i) numer[i] = from_mpz<Int>(s.numer[i]);
  const Int denom = from_mpz<Int>(s.denom);
  // dev[i] = D * (omega_i(k) - k a_i)
  std::vector<Int> dev(n, Int(0));
  std::vector<std::size_t> seq;
  seq.reserve(horizon);
  for (std::size_t k = 0; k < horizon; ++k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (dev[i] < dev[best] || (dev[i] == dev[best] && ids[i] < ids[best])) best = i;
    seq.push_back(best);
    dev[best] += denom;
    for (std::size_t i = 0; i < n; ++i) dev[i] -= numer[i];
  }
  return seq;
}

template <class Int>
BoundsReport bounds(const ScaledFrequencies& s, const std::vector<std::size_t>& seq) {
  const std::size_t n = s.numer.size();
  std::vector<Int> numer(n);
  for (std::size_t i = 0; i < n; ++i) numer[i] = from_mpz<Int>(s.numer[i]);
  const Int denom = from_mpz<Int>(s.denom);
  const Int upper = denom;
  const Int lower = denom * Int(1 - static_cast<long>(n));
  std::vector<Int> dev(n, Int(0));
  Int hi(0), lo(0);
  bool ok = true;
  for (std::size_t idx : seq) {
    dev[idx] += denom;
    for (std::size_t i = 0; i < n; ++i) {
      dev[i] -= numer[i];
      if (dev[i] > hi) hi = dev[i];
      if (dev[i] < lo) lo = dev[i];
      if (dev[i] > upper || dev[i] < lower) ok = false;
    }
  }
  auto to_rational = [&](const Int& v) {
    Rational r;
    if constexpr (std::is_same_v<Int, Integer>) {
      r = Rational(v, s.denom);
    } else {
      r = Rational(Integer(static_cast<long>(v)), s.denom);
    }
    r.canonicalize();
    return r;
  };
  BoundsReport r{to_rational(hi), to_rational(lo), ok};
  r.max_dev.canonicalize();
  r.min_dev.canonicalize();
  return r;
}

}  // namespace

Schedule Schedule::build(const std::vector<Rational>& a, std::size_t horizon, std::vector<PointId> ids) {
  validate_frequencies(a, ids.size());
  Schedule s;
  s.a_ = a;
  s.ids_ = std::move(ids);
  const ScaledFrequencies scaled = scale(a);
  s.sequence_ = fits_fast(scaled, horizon) ? greedy<__int128>(scaled, horizon, s.ids_)
                                           : greedy<Integer>(scaled, horizon, s.ids_);
  return s;
}

Schedule Schedule::from_sequence(const std::vector<Rational>& a, std::vector<std::size_t> sequence,
                                 std::vector<PointId> ids) {
  validate_frequencies(a, ids.size());
  for (std::size_t i : sequence)
    if (i >= a.size()) precondition_error("schedule index out of range");
  Schedule s;
  s.a_ = a;
  s.ids_ = std::move(ids);
  s.sequence_ = std::move(sequence);
  return s;
}

std::vector<PointId> Schedule::id_sequence() const {
  std::vector<PointId> out;
  out.reserve(sequence_.size());
  for (std::size_t i : sequence_) out.push_back(ids_[i]);
  return out;
}

std::vector<long> Schedule::counters(std::size_t k) const {
  if (k > sequence_.size()) precondition_error("counter step beyond the schedule horizon");
  std::vector<long> omega(a_.size(), 0);
  for (std::size_t step = 0; step < k; ++step) ++omega[sequence_[step]];
  return omega;
}

BoundsReport check_bounds(const Schedule& schedule) {
  const ScaledFrequencies scaled = scale(schedule.frequencies());
  return fits_fast(scaled, schedule.horizon()) ? bounds<__int128>(scaled, schedule.sequence())
                                               : bounds<Integer>(scaled, schedule.sequence());
}

WeightedFloor weighted_floor(const Schedule& schedule, const RationalGameMatrix& g, const Rational& v_prime) {
  const std::size_t n = schedule.frequencies().size();
  if (g.size() != n) precondition_error("matrix size does not match the schedule");
  WeightedFloor out;
  out.c = 0;

  const auto payoffs = column_payoffs(g, Strategy(schedule.frequencies()));
  for (std::size_t j = 0; j < n; ++j)
    if (!(payoffs[j] > ExtendedRational(v_prime))) {
      out.precondition_ok = false;
      out.diagnostic = "column " + std::to_string(j) + " payoff of a does not exceed V'";
      break;
    }

  std::vector<Rational> col_sum(n);
  std::vector<bool> col_infinite(n, false);
  std::size_t k = 0;
  for (std::size_t idx : schedule.sequence()) {
    ++k;
    for (std::size_t j = 0; j < n; ++j) {
      if (g[idx][j].is_infinite())
        col_infinite[j] = true;
      else
        col_sum[j] += g[idx][j].value();
    }
    const Rational target = Rational(static_cast<long>(k)) * v_prime;
    for (std::size_t j = 0; j < n; ++j) {
      if (col_infinite[j]) continue;
      Rational gap = target - col_sum[j];
      if (gap > out.c) out.c = gap;
    }
  }
  return out;
}

}  // namespace capgame
