#include "capgame/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "capgame/error.hpp"

namespace capgame {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) parse_error("malformed rational '" + std::string(whole) + "'");
  Integer n(std::string(s), 10);
  return negative ? Integer(-n) : n;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    Integer ex = parse_integer(s.substr(e + 1), whole);
    if (!ex.fits_slong_p() || abs(ex) > 10000) parse_error("exponent out of range in '" + std::string(whole) + "'");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      parse_error("malformed rational '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) parse_error("malformed rational '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  Rational r{Integer(digits, 10)};
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0)
    r *= ten_pow;
  else
    r /= ten_pow;
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) parse_error("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) parse_error("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& r) { return r.get_str(); }

double log_abs(const Integer& n) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rational& r) { return log_abs(r.get_num()) - log_abs(r.get_den()); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long valuation(const Rational& r, long p) {
  Integer pp(p);
  auto count = [&](Integer n) {
    long v = 0;
    n = abs(n);
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      ++v;
    }
    return v;
  };
  return count(r.get_num()) - count(r.get_den());
}

std::vector<long> prime_support(const Rational& r) {
  std::vector<long> primes;
  auto collect = [&](Integer n) {
    n = abs(n);
    for (long d = 2; n > 1; ++d) {
      if (Integer(d) * d > n) {
        if (!n.fits_slong_p()) return;  // large prime cofactor; unsupported for gauge bookkeeping
        primes.push_back(n.get_si());
        return;
      }
      if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) {
        primes.push_back(d);
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(d))) n /= d;
      }
    }
  };
  collect(r.get_num());
  collect(r.get_den());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Rational rationalize(double x, const Integer& max_denominator) {
  Rational exact(x);  // exact binary value
  // Convergents h_k/k_k of the continued fraction of `exact`.
  Integer h_prev = 1, h = 0, k_prev = 0, k = 1;
  Integer num = exact.get_num(), den = exact.get_den();
  Rational best(0);
  bool have = false;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer h_next = a * h_prev + h;
    Integer k_next = a * k_prev + k;
    if (k_next > max_denominator) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    best = Rational(h_prev, k_prev);
    have = true;
    Integer rem = num - a * den;
    num = den;
    den = rem;
  }
  if (!have) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), exact.get_num_mpz_t(), exact.get_den_mpz_t());
    best = Rational(fl);
  }
  best.canonicalize();
  return best;
}

}  // namespace capgame
