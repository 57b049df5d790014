#include "polyzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace polyzeta {

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr double kHalfPi = 1.5707963267948966;

struct Node {
  Complex value;
  double log10_mag;
};

class ExpSinh {
 public:
  ExpSinh(const HalfLineIntegrand& f) : f_(f), half_pi_(pi() / 2L) {}

  Node at(const Real& u) const {
    Real sh, ch;
    mpfr_sinh_cosh(sh.raw(), ch.raw(), u.raw(), MPFR_RNDN);
    Real w = half_pi_ * sh;
    Real t = exp(w);
    Complex v = f_(t, w) * (t * half_pi_ * ch);
    if (!v.is_finite()) throw ConvergenceError("quadrature integrand is not finite");
    return {v, std::max(v.re.log10_abs(), v.im.log10_abs())};
  }

 private:
  const HalfLineIntegrand& f_;
  Real half_pi_;
};

}  // namespace

SeriesResult integrate_halfline(const HalfLineIntegrand& f, const Complex& singular_exponent,
                                const EvalConfig& cfg, int extra_digits) {
  if (singular_exponent.re.sign() <= 0)
    throw DomainError("integrate_halfline needs re(singular_exponent) > 0");
  const int P = cfg.guarded_digits() + std::max(extra_digits, 0) + 4;
  WorkingPrecision wp(bits_for_digits(P));
  ExpSinh rule(f);

  const double nu = std::max(singular_exponent.re.to_double(), 1e-3);
  const double decay = P * kLn10 + 10.0;
  const double h0 = 0.5;
  long kmin = -static_cast<long>(std::ceil(std::asinh(decay / (nu * kHalfPi)) / h0));
  long kmax = static_cast<long>(std::ceil(std::asinh(std::log(decay + 40.0) / kHalfPi) / h0));

  auto u_of = [](long j, long denom_pow) {
    Real u(j);
    return ldexp(u, -1 - denom_pow);  // j * h0 / 2^denom_pow
  };

  Complex sum;
  double top = -INFINITY;
  Node lo = rule.at(u_of(kmin, 0));
  Node hi = rule.at(u_of(kmax, 0));
  for (long k = kmin + 1; k < kmax; ++k) {
    Node n = rule.at(u_of(k, 0));
    top = std::max(top, n.log10_mag);
    sum += n.value;
  }
  top = std::max({top, lo.log10_mag, hi.log10_mag});
  // Grow the window while the end samples still matter.
  while (lo.log10_mag > top - P && kmin > -40) {
    sum += lo.value;
    lo = rule.at(u_of(--kmin, 0));
    top = std::max(top, lo.log10_mag);
  }
  while (hi.log10_mag > top - P && kmax < 24) {
    sum += hi.value;
    hi = rule.at(u_of(++kmax, 0));
    top = std::max(top, hi.log10_mag);
  }
  sum += lo.value;
  sum += hi.value;

  Real h = Real(h0);
  Complex S = sum * h;
  Real diff;
  SeriesResult out;
  out.route = Route::li_integral;
  long evaluations = kmax - kmin + 1;
  bool agreed = false;
  Real tol = cfg.tol();
  auto p10 = [](double e) { return std::isfinite(e) ? pow10(static_cast<long>(std::ceil(e))) : Real(); };
  Real floor_abs = p10(top - P + 4);
  for (int level = 1; level <= cfg.quad_levels; ++level) {
    h = h / 2L;
    Complex fresh;
    long jmin = kmin * (1L << level) + 1;
    long jmax = kmax * (1L << level) - 1;
    for (long j = jmin; j <= jmax; j += 2) {
      fresh += rule.at(u_of(j, level)).value;
      ++evaluations;
    }
    Complex next = S / 2L + fresh * h;
    diff = abs(next - S);
    S = next;
    if (level >= 3 && (diff <= tol * abs(S) || diff <= floor_abs)) {
      agreed = true;
      break;
    }
  }
  Real trunc = p10(std::max(lo.log10_mag, hi.log10_mag));
  out.value = S;
  out.terms_used = evaluations;
  out.tail_estimate = diff + trunc * Real(h0);
  out.work_digits = P;
  settle(out, cfg);
  out.converged = out.converged && agreed;
  return out;
}

}  // namespace polyzeta
