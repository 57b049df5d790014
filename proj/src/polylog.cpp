#include "polyzeta/polylog.hpp"

#include <algorithm>
#include <cmath>

#include "polyzeta/powers.hpp"
#include "polyzeta/quadrature.hpp"
#include "polyzeta/specfun.hpp"
#include "polyzeta/zfunction.hpp"

namespace polyzeta {

namespace {

void check_x(const Real& x) {
  if (x.sign() <= 0 || x >= Real(1)) throw DomainError("polylog needs 0 < x < 1");
}

void check_right_half(const Complex& s, const char* what) {
  if (s.re.sign() <= 0) throw DomainError(std::string(what) + " needs re(s) > 0");
}

// ratio bound for |t_{n+1}/t_n| beyond n
Real ratio_bound(const Real& x, long n, double sigma) {
  if (sigma >= 0) return x;
  return x * Real(std::pow((n + 2.0) / (n + 1.0), -sigma));
}

}  // namespace

long li_series_terms_estimate(const Complex& s, const Real& x, const EvalConfig& cfg) {
  check_x(x);
  const double sigma = s.re.to_double();
  const double lx = x.log10_abs();
  const double l1mx = (Real(1) - x).log10_abs();
  // |t_n| / (1 - x) <= tol |x|, with a little room for |Li| < |x|
  const double goal = cfg.tol_log10() + lx - 2;
  auto excess = [&](double n) { return n * lx - sigma * std::log10(n + 1.0) - l1mx - goal; };
  double lo = 1, hi = 2;
  while (excess(hi) > 0 && hi < 1e15) hi *= 2;
  if (excess(hi) > 0) return static_cast<long>(1e15);
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    (excess(mid) > 0 ? lo : hi) = mid;
  }
  return static_cast<long>(std::ceil(hi)) + 16;
}

SeriesResult li_series(const LiParams& p) {
  const EvalConfig& cfg = p.cfg;
  check_x(p.x);
  const long n_est = li_series_terms_estimate(p.s, p.x, cfg);
  const long N = std::min(cfg.max_terms, n_est);
  const long bits = cfg.guarded_bits() + static_cast<long>(std::ceil(std::log2(N + 1.0))) + 8;
  const double sigma = p.s.re.to_double();
  WorkingPrecision wp(bits);
  const Real x = p.x.rounded(bits);
  const Real tol = cfg.tol();
  Complex acc;
  Real xp = x;
  Real tail;
  long used = 0;
  bool done = false;
  PowerSieve sieve(p.s, N, [&](long) { return bits; });
  sieve.run([&](long m, const Complex& pw) {
    Complex t = pw * xp;
    acc += t;
    used = m;
    xp = xp * x;
    // bound on sum_{n>m}: |t_{m+1}| / (1 - r)
    Real r = ratio_bound(x, m, sigma);
    if (r < Real(1)) {
      Real next = abs(t) * ratio_bound(x, m - 1, sigma);
      tail = next / (Real(1) - r);
      if (m >= 2 && tail <= tol * abs(acc)) {
        done = true;
        return false;
      }
    } else {
      tail = Real(1e300);
    }
    return true;
  });
  SeriesResult r;
  r.value = acc.rounded(cfg.guarded_bits());
  r.terms_used = used;
  r.tail_estimate = tail;
  r.route = Route::direct;
  r.work_digits = digits_for_bits(bits);
  r.converged = done;
  if (!done) settle(r, cfg);
  return r;
}

SeriesResult li_integral(const LiParams& p) {
  const EvalConfig& cfg = p.cfg;
  check_x(p.x);
  check_right_half(p.s, "li_integral");
  const Complex sm1 = p.s - Complex(1);
  const Real x = p.x;
  const Real one_minus_x = Real(1) - x;
  auto f = [&](const Real& t, const Real& log_t) -> Complex {
    Real den = one_minus_x + expm1(t);
    if (sm1.is_zero()) return Complex(Real(1) / den);
    return exp(sm1 * log_t) / den;
  };
  const int extra = static_cast<int>(std::ceil(gamma_oscillation_loss(p.s)));
  SeriesResult r = integrate_halfline(f, p.s, cfg, extra);
  WorkingPrecision wp(bits_for_digits(cfg.guarded_digits() + extra));
  Complex scale = rgamma(p.s, cfg.with_digits(cfg.digits + extra)) * x;
  r.value = (r.value * scale).rounded(cfg.guarded_bits());
  r.tail_estimate = r.tail_estimate * abs(scale);
  r.route = Route::li_integral;
  settle(r, cfg);
  return r;
}

SeriesResult j_integral(const LiParams& p) {
  const EvalConfig& cfg = p.cfg;
  check_x(p.x);
  check_right_half(p.s, "j_integral");
  const Complex sm1 = p.s - Complex(1);
  const Real x = p.x;
  const Real one_minus_x = Real(1) - x;
  auto f = [&](const Real& t, const Real& log_t) -> Complex {
    Real e = exp(-t);
    Real base = one_minus_x - x * expm1(-t);
    Real w = x * e / (base * base);
    if (sm1.is_zero()) return Complex(w);
    return exp(sm1 * log_t) * w;
  };
  const int extra = static_cast<int>(std::ceil(gamma_oscillation_loss(p.s)));
  SeriesResult r = integrate_halfline(f, p.s, cfg, extra);
  WorkingPrecision wp(bits_for_digits(cfg.guarded_digits() + extra));
  Complex rg = rgamma(p.s, cfg.with_digits(cfg.digits + extra));
  r.value = (r.value * rg).rounded(cfg.guarded_bits());
  r.tail_estimate = r.tail_estimate * abs(rg);
  r.route = Route::li_integral;
  settle(r, cfg);
  return r;
}

Prop21Check check_prop21(const Complex& s, const Real& x, const EvalConfig& cfg) {
  check_x(x);
  check_right_half(s, "check_prop21");
  if (is_positive_integer(s))
    throw DomainError("check_prop21 excludes positive integer s; Z(1,x) and Z(k,x) have closed forms");
  SeriesResult li = li_series({s, x, cfg});
  SeriesResult z = z_direct({s, x, cfg});
  SeriesResult j = j_integral({s, x, cfg});
  WorkingPrecision wp(cfg.guarded_bits());
  Real lx = log(x);
  Complex lhs = (s - Complex(1)) * li.value;
  Real scale = max(Real(1), abs(lhs));
  Prop21Check out;
  out.li = li.value;
  out.z = z.value;
  out.j = j.value;
  out.residual = abs(lhs - z.value - j.value * lx) / scale;
  Real tails = abs(s - Complex(1)) * li.tail_estimate + z.tail_estimate + abs(lx) * j.tail_estimate;
  out.bound = tails * 10L / scale;
  out.passed = out.residual <= out.bound;
  return out;
}

}  // namespace polyzeta
