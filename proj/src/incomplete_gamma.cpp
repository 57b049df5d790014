#include <algorithm>
#include <cmath>

#include "polyzeta/specfun.hpp"

namespace polyzeta {

namespace {

// Modified Lentz on the Legendre continued fraction; converges for every a > 0.
Complex gamma_cf(const Complex& s, const Real& a, long digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  Real eps = pow10(-digits);
  Real tiny = pow10(-4 * digits);
  auto guard = [&](Complex& v) {
    if (abs(v) < tiny) v = Complex(tiny);
  };
  Complex b = Complex(a + Real(1)) - s;
  Complex c = Complex(Real(1) / tiny);
  Complex d = Complex(1) / b;
  Complex h = d;
  const long max_iter = 200000;
  long i = 1;
  for (; i <= max_iter; ++i) {
    Complex an = (s - Complex(i)) * Complex(i);  // -i (i - s)
    b += Complex(2);
    d = an * d + b;
    guard(d);
    c = b + an / c;
    guard(c);
    d = Complex(1) / d;
    Complex del = d * c;
    h *= del;
    if (abs(del - Complex(1)) <= eps) break;
  }
  if (i > max_iter) throw ConvergenceError("incomplete gamma continued fraction did not converge");
  return exp(s * Complex(log(a)) - Complex(a)) * h;
}

// gamma(s, a) = a^s e^{-a} sum_k a^k / (s (s+1) ... (s+k))
Complex lower_gamma_series(const Complex& s, const Real& a, long digits, double& loss) {
  WorkingPrecision wp(bits_for_digits(digits));
  Real eps = pow10(-digits);
  Complex term = Complex(1) / s;
  Complex sum = term;
  Real mag = abs(term);
  double ad = a.to_double();
  for (long k = 1; k < 1000000; ++k) {
    term = term * a / (s + Complex(k));
    sum += term;
    Real at = abs(term);
    mag = max(mag, at);
    if (k > ad && at <= eps * abs(sum)) break;
  }
  loss = std::max(0.0, mag.log10_abs() - abs(sum).log10_abs());
  return exp(s * Complex(log(a)) - Complex(a)) * sum;
}

}  // namespace

Complex upper_incomplete_gamma(const Complex& s, const Real& a, const EvalConfig& cfg) {
  if (a.sign() < 0) throw DomainError("upper incomplete gamma needs a >= 0");
  if (a.is_zero()) {
    if (s.re.sign() <= 0) throw DomainError("Gamma(s, 0) diverges for re(s) <= 0");
    return gamma(s, cfg);
  }
  long digits = cfg.guarded_digits() + 6;
  double sa = abs(s).to_double();
  double ad = a.to_double();
  // distance to the nearest pole of Gamma(s)
  double near_pole = 1.0;
  if (s.re.sign() <= 0 || s.re < Real(0.5)) {
    WorkingPrecision wp(64);
    Real k = round(s.re);
    if (k.sign() <= 0) near_pole = abs(Complex(s.re - k, s.im)).to_double();
  }
  if (ad > sa || near_pole < 0.25) {
    WorkingPrecision wp(bits_for_digits(digits));
    return gamma_cf(s, a, digits).rounded(cfg.guarded_bits());
  }
  // series complement, retried when the lower sum or the subtraction cancels
  long work = digits + 10;
  for (int attempt = 0; attempt < 3; ++attempt) {
    double loss = 0;
    EvalConfig inner = cfg.with_digits(static_cast<int>(work));
    Complex lower = lower_gamma_series(s, a, work, loss);
    WorkingPrecision wp(bits_for_digits(work));
    Complex g = gamma(s, inner);
    Complex r = g - lower;
    double sub_loss = std::max(abs(g).log10_abs(), abs(lower).log10_abs()) - abs(r).log10_abs();
    double total = loss + std::max(0.0, sub_loss);
    if (total < work - digits - 2) return r.rounded(cfg.guarded_bits());
    work = digits + static_cast<long>(std::ceil(total)) + 12;
  }
  throw ConvergenceError("incomplete gamma series complement lost all precision");
}

}  // namespace polyzeta
