#include "polyzeta/tail.hpp"

#include <gmpxx.h>

#include <cmath>
#include <vector>

#include "polyzeta/specfun.hpp"

namespace polyzeta {

namespace {

using Series = std::vector<Complex>;

Series cauchy(const Series& a, const Series& b, size_t order) {
  Series c(order);
  for (size_t n = 0; n < order; ++n) {
    Complex acc;
    for (size_t k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    c[n] = acc;
  }
  return c;
}

// Taylor coefficients in u of 1/(c + u)
Series reciprocal_shift(const Real& c, size_t order) {
  Series r(order);
  Real inv = Real(1) / c;
  Real p = inv;
  for (size_t k = 0; k < order; ++k) {
    r[k] = Complex(k % 2 == 0 ? p : -p);
    p = p * inv;
  }
  return r;
}

// Taylor coefficients of h(N + u) = log(N+u)^{s-1} / ((N+u)(N+1+u))
Series h_coefficients(const Complex& s, long N, size_t order) {
  const Real rn(N);
  Series f(order);
  f[0] = Complex(log_ui(static_cast<unsigned long>(N)));
  Real inv = Real(1) / rn;
  Real p = inv;
  for (size_t k = 1; k < order; ++k) {
    Real v = p / static_cast<long>(k);
    f[k] = Complex(k % 2 == 1 ? v : -v);
    p = p * inv;
  }
  // Miller's recurrence for f^a
  const Complex a = s - Complex(1);
  Series y(order);
  y[0] = exp(a * log(f[0]));
  for (size_t n = 1; n < order; ++n) {
    Complex acc;
    for (size_t k = 1; k <= n; ++k) {
      Complex w = (a + Complex(1)) * static_cast<long>(k) - Complex(static_cast<long>(n));
      acc += w * f[k] * y[n - k];
    }
    y[n] = acc / (f[0] * static_cast<long>(n));
  }
  Series g = cauchy(reciprocal_shift(rn, order), reciprocal_shift(rn + Real(1), order), order);
  return cauchy(y, g, order);
}

}  // namespace

Complex z_tail_model(const Complex& s, long N, const EvalConfig& cfg) {
  if (N < 2) throw DomainError("tail model needs N >= 2");
  if (is_nonpositive_integer(s)) return Complex();
  WorkingPrecision wp(cfg.guarded_bits());
  const Real ell = log_ui(static_cast<unsigned long>(N));
  const Real tol = pow10(-cfg.guarded_digits());

  // integral part: alternating j-sum, terms ~ N^{-j}
  Complex integral;
  const long jmax = static_cast<long>(std::ceil(cfg.guarded_digits() / std::log10(static_cast<double>(N)))) + 3;
  for (long j = 1; j <= jmax; ++j) {
    Complex t = rpow(Real(j), -s) * upper_incomplete_gamma(s, ell * j, cfg);
    if (j % 2 == 0) integral -= t;
    else integral += t;
    if (abs(t) <= tol * abs(integral)) break;
  }

  // Euler-Maclaurin boundary terms; asymptotic, so stop at the smallest term
  const size_t order = 80;
  Series h = h_coefficients(s, N, order);
  Complex boundary = h[0] / 2L;
  Real last;
  for (size_t j = 1; 2 * j - 1 < order; ++j) {
    mpq_class b = bernoulli(static_cast<long>(2 * j));
    Real br;
    mpfr_set_q(br.raw(), b.get_mpq_t(), MPFR_RNDN);
    Complex t = h[2 * j - 1] * br / static_cast<long>(2 * j);
    Real mag = abs(t);
    if (j > 1 && mag > last) break;
    boundary += t;
    last = mag;
    if (mag <= tol * abs(boundary)) break;
  }
  Complex r = (integral - boundary) * rgamma(s, cfg);
  return r.rounded(cfg.guarded_bits());
}

Real z_tail_correction_bound(const Complex& s, const Real& x, long N, const EvalConfig& cfg) {
  if (N < 2) throw DomainError("tail model needs N >= 2");
  EvalConfig low = cfg.with_digits(20);
  WorkingPrecision wp(low.guarded_bits());
  Real ell = log_ui(static_cast<unsigned long>(N));
  Real shift = abs(log(x) + euler_mascheroni(low));
  Complex rg = rgamma(s - Complex(1), low);
  if (rg.is_zero()) return Real(0);
  Real g = abs(upper_incomplete_gamma(Complex(s.re - Real(1)), ell, low));
  return shift * abs(rg) * g;
}

}  // namespace polyzeta
