#include "polyzeta/sigma.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "polyzeta/powers.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/specfun.hpp"

namespace polyzeta {

namespace {

constexpr double kLog2_10 = 3.321928094887362;

void check_params(const SigmaParams& p) {
  if (p.n < 1) throw DomainError("sigma needs n >= 1");
  if (p.x.sign() <= 0 || p.x > Real(1)) throw DomainError("sigma needs 0 < x <= 1");
}

// log2 |C(n-1,k) x^{k+1} (k+1)^{-s}|, k = 0..n-1
std::vector<double> term_log2(long n, double sigma, double log2x) {
  std::vector<double> lt(static_cast<size_t>(n));
  double lb = 0;
  for (long k = 0; k < n; ++k) {
    lt[static_cast<size_t>(k)] = lb + (k + 1) * log2x - sigma * std::log2(k + 1.0);
    if (k + 1 < n) lb += std::log2(static_cast<double>(n - 1 - k) / static_cast<double>(k + 1));
  }
  return lt;
}

double initial_floor_log2(long n, double sigma) {
  return std::log2(1e-3 / n) + std::min(0.0, sigma - 1.0) * std::log2(std::log(n + 1.0) + 1.0);
}

struct Profile {
  std::vector<double> lt;
  double floor2;
  long guard;
  long bits(long m) const {
    double b = lt[static_cast<size_t>(m - 1)] - floor2;
    return std::max(64L, static_cast<long>(std::ceil(std::max(b, 0.0))) + guard);
  }
  long top() const {
    double mx = *std::max_element(lt.begin(), lt.end());
    return std::max(64L, static_cast<long>(std::ceil(std::max(mx - floor2, 0.0))) + guard);
  }
};

Profile make_profile(long n, const Complex& s, const Real& x, const EvalConfig& cfg) {
  Profile pr;
  double sigma = s.re.to_double();
  pr.lt = term_log2(n, sigma, x.log10_abs() * kLog2_10);
  pr.floor2 = initial_floor_log2(n, sigma);
  pr.guard = cfg.guarded_bits() + static_cast<long>(std::ceil(std::log2(n + 1.0))) + 24;
  return pr;
}

Complex profiled_sum(const Complex& s, const Real& x, long n, const Profile& pr) {
  const long top = pr.top();
  PowerSieve sieve(s, n, [&](long m) { return pr.bits(m); });
  WorkingPrecision wp(top);
  Complex acc;
  Real xp = x.rounded(top);
  mpz_class binom = 1;
  sieve.run([&](long m, const Complex& pw) {
    const long k = m - 1;
    const long b = pr.bits(m);
    Complex term;
    {
      WorkingPrecision local(b);
      Real w;
      mpfr_set_z(w.raw(), binom.get_mpz_t(), MPFR_RNDN);
      w = w * (xp.bits() > b + b / 4 ? xp.rounded(b) : xp);
      term = pw * w;
    }
    if (k % 2 == 0) {
      mpfr_add(acc.re.raw(), acc.re.raw(), term.re.raw(), MPFR_RNDN);
      mpfr_add(acc.im.raw(), acc.im.raw(), term.im.raw(), MPFR_RNDN);
    } else {
      mpfr_sub(acc.re.raw(), acc.re.raw(), term.re.raw(), MPFR_RNDN);
      mpfr_sub(acc.im.raw(), acc.im.raw(), term.im.raw(), MPFR_RNDN);
    }
    mpfr_mul(xp.raw(), xp.raw(), x.raw(), MPFR_RNDN);
    if (k + 1 < n) {
      binom *= static_cast<unsigned long>(n - 1 - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    return true;
  });
  return acc;
}

// m^alpha, m = 1..n, then j! S{alpha, j} by the alternating binomial sum.
Complex delta_power(const std::vector<Complex>& pw, long j) {
  Complex acc;
  mpz_class c = 1;  // C(j, m) for m = 0
  for (long m = 1; m <= j; ++m) {
    c *= static_cast<unsigned long>(j - m + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
    Real cr;
    mpfr_set_z(cr.raw(), c.get_mpz_t(), MPFR_RNDN);
    Complex t = pw[static_cast<size_t>(m)] * cr;
    if ((j - m) % 2 == 0) acc += t;
    else acc -= t;
  }
  return acc;
}

long stirling_work_digits(const Complex& alpha, long j, const EvalConfig& cfg) {
  return cfg.guarded_digits() + static_cast<long>(std::ceil(0.302 * j)) +
         static_cast<long>(std::ceil(std::fabs(alpha.re.to_double()) * std::log10(j + 1.0))) + 10;
}

Real factorial(long j) {
  Real f(1);
  for (long i = 2; i <= j; ++i) f = f * i;
  return f;
}

// s = -q, q >= 0: every term is a dyadic rational, so the sum is exact.
// x = m 2^e; scaling by 2^{-e n} makes each term an integer.
bool exact_polynomial_sum(long n, long q, const Real& x, Complex& out) {
  mpz_class m;
  long e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw());
  if (static_cast<double>(n) * static_cast<double>(x.bits() + q * 20) > 4e6) return false;
  mpz_class sum = 0, binom = 1, mp = m, t;
  for (long k = 0; k < n; ++k) {
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(q));
    t *= binom * mp;
    if (e < 0) mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(-e * (n - k - 1)));
    else mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(e * (k + 1)));
    if (k % 2 == 0) sum += t;
    else sum -= t;
    mp *= m;
    if (k + 1 < n) {
      binom *= static_cast<unsigned long>(n - 1 - k);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
  }
  Real v;
  mpfr_set_z_2exp(v.raw(), sum.get_mpz_t(), e < 0 ? e * n : 0, MPFR_RNDN);
  out = Complex(v);
  return true;
}

}  // namespace

long sigma_budget_digits(long n, const Complex& s, const Real& x, const EvalConfig& cfg) {
  if (n < 1) throw DomainError("sigma needs n >= 1");
  return digits_for_bits(make_profile(n, s, x, cfg).top());
}

Complex sigma_direct(const SigmaParams& p, const EvalConfig& cfg) {
  check_params(p);
  if (is_nonpositive_integer(p.s)) {
    WorkingPrecision wp(cfg.guarded_bits());
    Complex v;
    if (exact_polynomial_sum(p.n, -p.s.re.to_long(), p.x, v)) return v;
  }
  Profile pr = make_profile(p.n, p.s, p.x, cfg);
  for (int attempt = 0; attempt < 16; ++attempt) {
    long top = pr.top();
    if (digits_for_bits(top) > cfg.max_work_digits)
      throw PrecisionError("sigma_n with n = " + std::to_string(p.n) + " needs " +
                           std::to_string(digits_for_bits(top)) + " digits, above max_work_digits = " +
                           std::to_string(cfg.max_work_digits));
    Complex v = profiled_sum(p.s, p.x, p.n, pr);
    if (v.is_zero()) return v.rounded(cfg.guarded_bits());
    double lv = abs(v).log10_abs() * kLog2_10;
    // the profile assumed |sigma| >= 2^floor2; accept unless the result fell well below it
    if (lv >= pr.floor2 - 2) return v.rounded(cfg.guarded_bits());
    // v may itself be rounding noise, so the step grows with each retry
    pr.floor2 = lv - 8 - (pr.floor2 - lv) * static_cast<double>(1L << attempt);
  }
  throw PrecisionError("sigma_direct could not settle its precision budget");
}

StirlingValue stirling_generalized(const Complex& alpha, long j, const EvalConfig& cfg) {
  if (j < 1) throw DomainError("stirling_generalized needs j >= 1");
  long work = stirling_work_digits(alpha, j, cfg);
  WorkingPrecision wp(bits_for_digits(work));
  std::vector<Complex> pw(static_cast<size_t>(j + 1));
  for (long m = 1; m <= j; ++m) pw[static_cast<size_t>(m)] = rpow(Real(m), alpha);
  Complex v = delta_power(pw, j) / factorial(j);
  return {alpha, j, v.rounded(cfg.guarded_bits())};
}

Complex sigma_stirling(const SigmaParams& p, const EvalConfig& cfg) {
  check_params(p);
  const long n = p.n;
  Complex alpha = Complex(1) - p.s;
  // cancellation inside each j! S{alpha, j} and again across the Bernstein sum
  long work = cfg.guarded_digits() + static_cast<long>(std::ceil(0.61 * n)) +
              static_cast<long>(std::ceil(std::fabs(alpha.re.to_double()) * std::log10(n + 1.0))) +
              static_cast<long>(std::ceil(std::log10(n + 1.0))) + 12;
  if (work > cfg.max_work_digits) throw PrecisionError("sigma_stirling precision budget exceeded");
  WorkingPrecision wp(bits_for_digits(work));
  std::vector<Complex> pw(static_cast<size_t>(n + 1));
  for (long m = 1; m <= n; ++m) pw[static_cast<size_t>(m)] = rpow(Real(m), alpha);
  Real x = p.x.rounded(bits_for_digits(work));
  Real y = Real(1) - x;
  Complex acc;
  mpz_class c = 1;  // C(n, j)
  for (long j = 1; j <= n; ++j) {
    c *= static_cast<unsigned long>(n - j + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
    Real w;
    mpfr_set_z(w.raw(), c.get_mpz_t(), MPFR_RNDN);
    w = w * pow_ui(x, static_cast<unsigned long>(j)) * pow_ui(y, static_cast<unsigned long>(n - j));
    if (w.is_zero()) continue;
    Complex t = delta_power(pw, j) * w;
    if (j % 2 == 0) acc += t;
    else acc -= t;
  }
  return (-acc / n).rounded(cfg.guarded_bits());
}

SeriesResult sigma_integral(const SigmaParams& p, const EvalConfig& cfg) {
  check_params(p);
  if (p.s.re.sign() <= 0) throw DomainError("sigma_integral needs re(s) > 0");
  if (p.x >= Real(1)) throw DomainError("sigma_integral needs 0 < x < 1");
  const long n = p.n;
  const Complex sm1 = p.s - Complex(1);
  const Real x = p.x;
  const Real one_minus_x = Real(1) - x;
  auto f = [&](const Real& t, const Real& log_t) -> Complex {
    Real e = exp(-t);
    Real base = one_minus_x - x * expm1(-t);
    Real w = pow_ui(base, static_cast<unsigned long>(n - 1)) * x * e;
    if (sm1.is_zero()) return Complex(w);
    return exp(sm1 * log_t) * w;
  };
  int extra = static_cast<int>(std::ceil(gamma_oscillation_loss(p.s)));
  SeriesResult r = integrate_halfline(f, p.s, cfg, extra);
  WorkingPrecision wp(bits_for_digits(cfg.guarded_digits() + extra));
  Complex rg = rgamma(p.s, cfg.with_digits(cfg.digits + extra));
  r.value = (r.value * rg).rounded(cfg.guarded_bits());
  r.tail_estimate = r.tail_estimate * abs(rg);
  settle(r, cfg);
  return r;
}

Complex s_n(long n, const Complex& s, const EvalConfig& cfg) {
  return sigma_direct(SigmaParams{n, s, Real(1)}, cfg);
}

Complex sigma_asymptotic(const SigmaParams& p, AsymptoticOrder order, const EvalConfig& cfg) {
  check_params(p);
  if (p.n < 3) throw DomainError("sigma_asymptotic needs n >= 3");
  if (is_nonpositive_integer(p.s)) {
    long k = p.s.re.to_long();
    throw PoleError(k, "sigma asymptotic has no Gamma(s) normalisation at s = " + std::to_string(k));
  }
  WorkingPrecision wp(cfg.guarded_bits());
  Real ln = log_ui(static_cast<unsigned long>(p.n));
  Real lx = log(p.x);
  Real rn(p.n);
  if (is_positive_integer(p.s)) {
    long k = p.s.re.to_long();
    Real v = pow_ui(ln, static_cast<unsigned long>(k - 1)) / (rn * factorial(k - 1));
    if (order == AsymptoticOrder::two_term && k >= 2)
      v = v + lx * pow_ui(ln, static_cast<unsigned long>(k - 2)) / (rn * factorial(k - 2));
    return Complex(v);
  }
  Real base = order == AsymptoticOrder::one_term ? ln : ln + lx;
  if (base.sign() <= 0) throw DomainError("log n + log x must be positive for the two-term estimate");
  return rpow(base, p.s - Complex(1)) * rgamma(p.s, cfg) / rn;
}

}  // namespace polyzeta
