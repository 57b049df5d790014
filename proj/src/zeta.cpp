#include <algorithm>
#include <cmath>
#include <vector>

#include "polyzeta/specfun.hpp"

namespace polyzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;

Real from_mpz(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real from_mpq(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// Borwein's Algorithm 2 with d_k kept as exact integers.
Complex zeta_borwein(const Complex& s, const Complex& denom, long digits) {
  double t = std::fabs(s.im.to_double());
  double sigma = s.re.to_double();
  double loss = -abs(denom).log10_abs();
  double need = digits * kLn10 + M_PI * t / 2 + std::log1p(2 * t) + std::max(loss, 0.0) * kLn10 + 3;
  long n = static_cast<long>(std::ceil(need / std::log(3 + std::sqrt(8.0))));
  need += std::max(0.0, -sigma) * std::log(static_cast<double>(n) + 1);
  n = static_cast<long>(std::ceil(need / std::log(3 + std::sqrt(8.0)))) + 2;

  long work = digits + static_cast<long>(0.69 * t + std::max(loss, 0.0) +
                                         std::max(0.0, -sigma) * std::log10(n + 1.0)) + 10;
  WorkingPrecision wp(bits_for_digits(work));

  std::vector<mpz_class> d(static_cast<size_t>(n + 1));
  mpz_class term = 1, acc = 1;
  d[0] = 1;
  for (long i = 0; i < n; ++i) {
    term *= 2 * (n + i) * (n - i);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>((i + 1) * (2 * i + 1)));
    acc += term;
    d[static_cast<size_t>(i + 1)] = acc;
  }
  const mpz_class& dn = d[static_cast<size_t>(n)];
  Complex sum;
  Complex minus_s = -s;
  for (long k = 0; k < n; ++k) {
    Complex p = rpow(Real(k + 1), minus_s) * from_mpz(d[static_cast<size_t>(k)] - dn);
    if (k % 2 == 0) sum += p;
    else sum -= p;
  }
  return -sum / (denom * from_mpz(dn));
}

}  // namespace

Complex zeta_euler_maclaurin(const Complex& s, const EvalConfig& cfg) {
  if (s.im.is_zero() && s.re == Real(1)) throw PoleError(1, "zeta has a pole at 1");
  long digits = cfg.guarded_digits() + 6;
  double smag = abs(s).to_double();
  long N = static_cast<long>(std::ceil(smag)) + digits + 10;
  long work = digits + static_cast<long>(std::max(0.0, -s.re.to_double()) * std::log10(N)) + 10;
  WorkingPrecision wp(bits_for_digits(work));

  Complex sum;
  Complex minus_s = -s;
  for (long k = 1; k < N; ++k) sum += rpow(Real(k), minus_s);
  Real RN(N);
  Complex NmS = rpow(RN, minus_s);
  sum += NmS * RN / (s - Complex(1));
  sum += NmS / 2L;
  // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
  Complex rising = s;           // (s)_{2j-1}
  Complex power = NmS / RN;     // N^{-s-1}
  Real fact(2);                 // (2j)!
  Real eps = pow10(-work);
  Real invN2 = Real(1) / (RN * RN);
  for (long j = 1; j < 4 * digits; ++j) {
    Complex term = rising * power * (from_mpq(bernoulli(2 * j)) / fact);
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
    rising = rising * (s + Complex(2 * j - 1)) * (s + Complex(2 * j));
    power = power * invN2;
    fact = fact * ((2 * j + 1) * (2 * j + 2));
  }
  return sum.rounded(cfg.guarded_bits());
}

Complex zeta(const Complex& s, const EvalConfig& cfg) {
  if (s.im.is_zero() && s.re == Real(1)) throw PoleError(1, "zeta has a pole at 1");
  long digits = cfg.guarded_digits() + 4;
  WorkingPrecision wp(bits_for_digits(digits));
  if (s.im.is_zero() && s.re.sign() < 0 && s.re.is_integer() && s.re.to_long() % 2 == 0)
    return Complex();
  if (s.re > Real(-2)) {
    Complex denom = Complex(1) - rpow(Real(2), Complex(1) - s);
    if (abs(denom) < Real(1e-3)) return zeta_euler_maclaurin(s, cfg);
    return zeta_borwein(s, denom, digits).rounded(cfg.guarded_bits());
  }
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
  Complex one_minus = Complex(1) - s;
  EvalConfig inner = cfg.with_digits(cfg.digits + 4);
  Complex z1 = zeta(one_minus, inner);
  Complex g = gamma(one_minus, inner);
  WorkingPrecision wp2(bits_for_digits(digits + 4));
  Complex f = rpow(Real(2), s) * rpow(pi(), s - Complex(1)) * sin(s * pi() / 2L);
  return (f * g * z1).rounded(cfg.guarded_bits());
}

Complex ZetaCache::get(const Complex& s, long shift, const EvalConfig& cfg) {
  std::string key_s;
  {
    WorkingPrecision wp(cfg.guarded_bits());
    key_s = s.re.to_string(cfg.digits + 6) + "," + s.im.to_string(cfg.digits + 6);
  }
  auto key = std::make_tuple(key_s, shift, cfg.digits);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
  }
  Complex v;
  {
    WorkingPrecision wp(cfg.guarded_bits());
    v = zeta(s - Complex(shift), cfg);
  }
  std::lock_guard<std::mutex> lock(mu_);
  entries_.emplace(key, v);
  return v;
}

size_t ZetaCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

void ZetaCache::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.clear();
}

ZetaCache& shared_zeta_cache() {
  static ZetaCache cache;
  return cache;
}

}  // namespace polyzeta
