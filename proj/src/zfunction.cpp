#include "polyzeta/zfunction.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>

#include "polyzeta/polylog.hpp"
#include "polyzeta/sigma.hpp"
#include "polyzeta/specfun.hpp"
#include "polyzeta/tail.hpp"

namespace polyzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586;

void check_open_unit(const Real& x) {
  if (x.sign() <= 0 || x >= Real(1)) throw DomainError("Z(s,x) needs 0 < x < 1");
}

// x <= e^{-2 pi} puts |log x| outside the radius of the zeta-value sums
void check_expansion_domain(const Real& x) {
  check_open_unit(x);
  WorkingPrecision wp(128);
  if (log(x) <= -(pi() * 2L))
    throw DomainError("the zeta-value expansion diverges for x <= e^{-2 pi}");
}

Real to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// |L|/(2 pi) (1 + (|s|+2)/n): asymptotic ratio of consecutive shift terms
double shift_ratio(double absL, double abs_s, long n) {
  return absL / kTwoPi * (1.0 + (abs_s + 2.0) / static_cast<double>(n));
}

struct ExpansionRun {
  ExpansionTerms terms;
  Real tail;
  bool converged = false;
  double loss = 0;  // digits lost to cancellation among the terms
};

ExpansionRun expansion_at(const Complex& s, const Real& xin, const EvalConfig& work, const EvalConfig& out) {
  WorkingPrecision wp(work.guarded_bits());
  ZetaCache& cache = shared_zeta_cache();
  const Real x = xin.rounded(work.guarded_bits());
  const Real L = log(x);
  const Real mL = -L;
  const Complex sm1 = s - Complex(1);
  const double absL = abs(L).to_double();
  const double abs_s = abs(s).to_double();
  const Real tol = out.tol();

  ExpansionRun run;
  Complex leading = sm1 * cache.get(s, 0, work);
  Complex g = gamma(Complex(1) - s, work);
  Complex first = sm1 * g * rpow(mL, sm1);
  Complex second = L * (-sm1 * g) * rpow(mL, s - Complex(2));  // Gamma(2-s) = (1-s) Gamma(1-s)
  Complex gterm = first - second;
  Complex zeta_next = cache.get(s, 1, work);
  Complex log_term = -(L * zeta_next);

  Real biggest = max(max(abs(leading), abs(first)), abs(log_term));
  Complex partial = leading + gterm + log_term;
  Real coef(1);  // L^n / n!
  std::vector<Complex> shifts;
  Real tail(1e300);
  for (long n = 1;; ++n) {
    coef = coef * L / n;
    Complex z_n = zeta_next;  // zeta(s - n)
    zeta_next = cache.get(s, n + 1, work);
    Complex t = (sm1 * z_n - L * zeta_next) * coef;
    shifts.push_back(t);
    partial += t;
    biggest = max(biggest, abs(t));
    double rho = shift_ratio(absL, abs_s, n);
    if (rho < 1.0) {
      tail = abs(t) * Real(rho / (1.0 - rho));
      if (n >= 2 && tail <= tol * abs(partial)) {
        run.converged = true;
        break;
      }
    }
    if (n >= out.expansion_terms) break;
  }
  Real ap = abs(partial);
  run.loss = ap.is_zero() ? 0.0 : std::max(0.0, biggest.log10_abs() - ap.log10_abs());
  const long ob = out.guarded_bits();
  run.terms.leading = leading.rounded(ob);
  run.terms.gamma_term = gterm.rounded(ob);
  run.terms.log_term = log_term.rounded(ob);
  for (auto& t : shifts) run.terms.shift_terms.push_back(t.rounded(ob));
  run.terms.n_used = static_cast<long>(shifts.size());
  run.tail = tail;
  return run;
}

SeriesResult closed_form_result(const Complex& v) {
  SeriesResult r;
  r.value = v;
  r.tail_estimate = Real(0);
  r.converged = true;
  r.route = Route::closed_form;
  return r;
}

// nearest positive integer k when |s - k| < eps
std::optional<long> near_positive_integer(const Complex& s, double eps) {
  WorkingPrecision wp(std::max(128L, s.re.bits()));
  Real k = round(s.re);
  if (k.sign() <= 0) return std::nullopt;
  if (abs(Complex(s.re - k, s.im)) < Real(eps)) return k.to_long();
  return std::nullopt;
}

}  // namespace

Complex ExpansionTerms::sum() const {
  WorkingPrecision wp(std::max(leading.re.bits(), leading.im.bits()));
  Complex acc = leading + gamma_term;
  acc += log_term;
  for (const auto& t : shift_terms) acc += t;
  return acc;
}

long z_direct_feasible_terms(const Complex& s, const Real& x, const EvalConfig& cfg) {
  auto fits = [&](long n) { return weighted_sum_budget_digits(s, x, n, cfg) <= cfg.max_work_digits; };
  long lo = 1, hi = cfg.max_terms;
  if (fits(hi)) return hi;
  if (!fits(lo)) return 0;
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  return lo;
}

SeriesResult z_direct_series(const Complex& s, const Real& x, const EvalConfig& cfg) {
  if (x.sign() <= 0 || x > Real(1)) throw DomainError("direct series needs 0 < x <= 1");
  const long N = z_direct_feasible_terms(s, x, cfg);
  if (N < 16)
    throw PrecisionError("direct series: precision budget allows only N = " + std::to_string(N) +
                         " terms; raise max_work_digits");
  WeightedPartialSums ws = sigma_weighted_partial_sums(s, x, N, cfg);
  Complex tn = z_tail_model(s, ws.n_full, cfg);
  Complex th = z_tail_model(s, ws.n_half, cfg);
  WorkingPrecision wp(cfg.guarded_bits());
  SeriesResult r;
  r.value = (ws.full + tn).rounded(cfg.guarded_bits());
  // the model's miss over (N/2, N] bounds its miss beyond N
  Real block = abs((ws.full - ws.half) - (th - tn)) * 2L;
  Real floor = cfg.tol() * max(Real(1), abs(r.value));  // rounding of the summation
  r.tail_estimate = max(max(block, z_tail_correction_bound(s, x, N, cfg)), floor);
  r.terms_used = N;
  r.route = Route::direct;
  r.work_digits = ws.work_digits;
  settle(r, cfg);
  return r;
}

SeriesResult z_direct(const ZParams& p) {
  check_open_unit(p.x);
  return z_direct_series(p.s, p.x, p.cfg);
}

SeriesResult z_via_li(const ZParams& p) {
  check_open_unit(p.x);
  if (p.s.re.sign() <= 0) throw DomainError("z_via_li needs re(s) > 0");
  SeriesResult li = li_series({p.s, p.x, p.cfg});
  SeriesResult j = j_integral({p.s, p.x, p.cfg});
  WorkingPrecision wp(p.cfg.guarded_bits());
  Real L = log(p.x);
  Complex sm1 = p.s - Complex(1);
  SeriesResult r;
  r.value = (sm1 * li.value - j.value * L).rounded(p.cfg.guarded_bits());
  r.tail_estimate = abs(sm1) * li.tail_estimate + abs(L) * j.tail_estimate;
  r.terms_used = li.terms_used;
  r.route = Route::li_integral;
  r.work_digits = std::max(li.work_digits, j.work_digits);
  settle(r, p.cfg);
  r.converged = r.converged && li.converged && j.converged;
  return r;
}

std::pair<SeriesResult, ExpansionTerms> z_expansion(const ZParams& p) {
  const EvalConfig& cfg = p.cfg;
  check_expansion_domain(p.x);
  if (is_positive_integer(p.s))
    throw DomainError("z_expansion excludes positive integer s; use z_integer or z_at_one");
  // Gamma(1-s) and zeta(1+eps) blow up near s = k and cancel between terms
  int extra = 0;
  if (auto k = near_positive_integer(p.s, 0.5)) {
    WorkingPrecision wp(128);
    Real d = abs(p.s - Complex(*k));
    extra = static_cast<int>(std::ceil(std::max(0.0, -d.log10_abs())));
  }
  ExpansionRun run = expansion_at(p.s, p.x, cfg.with_digits(cfg.digits + extra), cfg);
  if (run.loss > 3.0) {
    int more = extra + static_cast<int>(std::ceil(run.loss)) + 2;
    run = expansion_at(p.s, p.x, cfg.with_digits(cfg.digits + more), cfg);
    extra = more;
  }
  SeriesResult r;
  r.value = run.terms.sum();
  r.terms_used = run.terms.n_used;
  r.tail_estimate = run.tail.rounded(64);
  r.route = Route::expansion;
  r.work_digits = cfg.guarded_digits() + extra;
  settle(r, cfg);
  r.converged = r.converged && run.converged;
  return {r, run.terms};
}

SeriesResult z_bilateral(const ZParams& p, long n_max) {
  const EvalConfig& cfg = p.cfg;
  check_open_unit(p.x);
  if (p.s.re.sign() >= 0) throw DomainError("z_bilateral needs re(s) < 0");
  if (n_max < 1) throw DomainError("z_bilateral needs n_max >= 1");
  const long bits = cfg.guarded_bits() + static_cast<long>(std::ceil(std::log2(n_max + 1.0))) + 8;
  WorkingPrecision wp(bits);
  const Real x = p.x.rounded(bits);
  const Real L = log(x);
  const Real mL = -L;
  const Complex sm1 = p.s - Complex(1);
  const Complex sm2 = p.s - Complex(2);
  const Real two_pi = pi() * 2L;
  auto term = [&](long n) {
    Complex w(mL, two_pi * n);
    Complex w2 = cpow(w, sm2);
    return w2 * w + w2 * L;
  };
  Complex acc = term(0);
  for (long n = 1; n <= n_max; ++n) acc += term(n) + term(-n);
  Complex pref = sm1 * gamma(Complex(1) - p.s, cfg.with_digits(digits_for_bits(bits)));
  SeriesResult r;
  r.value = (pref * acc).rounded(cfg.guarded_bits());
  // |w_n| >= 2 pi |n| and |arg w_n| < pi/2
  {
    WorkingPrecision lw(128);
    const Real sig = p.s.re;
    Real c = abs(pref) * exp(abs(p.s.im) * pi() / 2L) * 2L * pow(two_pi, sig - Real(1));
    r.tail_estimate = c * pow(Real(n_max), sig) / abs(sig);
  }
  r.terms_used = 2 * n_max + 1;
  r.route = Route::bilateral;
  r.work_digits = digits_for_bits(bits);
  settle(r, cfg);
  return r;
}

SeriesResult z_integer(long k, const Real& xin, const EvalConfig& cfg) {
  if (k < 2) throw DomainError("z_integer needs k >= 2; k = 1 is z_at_one");
  check_expansion_domain(xin);
  WorkingPrecision wp(cfg.guarded_bits());
  ZetaCache& cache = shared_zeta_cache();
  const Real x = xin.rounded(cfg.guarded_bits());
  const Real L = log(x);
  const Real llog = log(-L);
  const Real tol = cfg.tol();
  const double absL = abs(L).to_double();
  const Complex sk(k);

  Real fk1(1), fk2(1);  // (k-1)!, (k-2)!
  for (long i = 2; i <= k - 1; ++i) fk1 = fk1 * i;
  for (long i = 2; i <= k - 2; ++i) fk2 = fk2 * i;
  Real lpow = pow_ui(L, static_cast<unsigned long>(k - 1));
  Real a = lpow * (k - 1) / fk1 * (to_real(harmonic(k - 1)) - llog);
  Real b = -(lpow / fk2 * (to_real(harmonic(k - 2)) - llog));
  Complex acc = Complex(a + b);

  Real coef(1);  // L^n / n!
  Real tail(1e300);
  bool converged = false;
  long n = 0;
  for (;; ++n) {
    if (n > 0) coef = coef * L / n;
    Complex t;
    if (n != k - 1) t += cache.get(sk, n, cfg) * coef * (k - 1);
    if (n != k - 2) t -= cache.get(sk, n + 1, cfg) * (coef * L);
    acc += t;
    if (n >= k) {
      double rho = shift_ratio(absL, static_cast<double>(k), n);
      if (rho < 1.0) {
        tail = abs(t) * Real(rho / (1.0 - rho));
        if (tail <= tol * abs(acc)) {
          converged = true;
          break;
        }
      }
    }
    if (n >= cfg.expansion_terms + k) break;
  }
  SeriesResult r;
  r.value = acc.rounded(cfg.guarded_bits());
  r.terms_used = n + 1;
  r.tail_estimate = tail.rounded(64);
  r.route = Route::integer_case;
  r.work_digits = cfg.guarded_digits();
  settle(r, cfg);
  r.converged = r.converged && converged;
  return r;
}

Complex z_at_one(const Real& x, const EvalConfig& cfg) {
  check_open_unit(x);
  WorkingPrecision wp(cfg.guarded_bits());
  Real xr = x.rounded(cfg.guarded_bits());
  return Complex(-(xr * log(xr)) / (Real(1) - xr)).rounded(cfg.guarded_bits());
}

Complex gamma_term_model(const Complex& s, const Real& xin, const EvalConfig& cfg) {
  check_open_unit(xin);
  WorkingPrecision wp(cfg.guarded_bits());
  const Real x = xin.rounded(cfg.guarded_bits());
  const Real L = log(x);
  const Real w = Real(1) - x * x;
  if (is_positive_integer(s)) {
    long k = s.re.to_long();
    if (k == 1) return Complex(-w);  // (s-1)Gamma(1-s) -> -1
    Real fk1(1);
    for (long i = 2; i <= k - 1; ++i) fk1 = fk1 * i;
    Real v = w * pow_ui(L, static_cast<unsigned long>(k - 1)) / fk1 * (to_real(harmonic(k - 1)) - log(-L));
    return Complex(v);
  }
  Complex sm1 = s - Complex(1);
  return (sm1 * gamma(Complex(1) - s, cfg) * rpow(-L, sm1) * w).rounded(cfg.guarded_bits());
}

SeriesResult evaluate(const ZParams& p, std::optional<Route> route) {
  const Complex& s = p.s;
  if (route) {
    switch (*route) {
      case Route::direct: return z_direct(p);
      case Route::li_integral: return z_via_li(p);
      case Route::expansion: return z_expansion(p).first;
      case Route::bilateral: return z_bilateral(p, 10000);
      case Route::integer_case:
        if (!is_positive_integer(s) || s.re < Real(2)) throw DomainError("integer_case route needs s = 2, 3, ...");
        return z_integer(s.re.to_long(), p.x, p.cfg);
      case Route::closed_form:
        if (!(s.im.is_zero() && s.re == Real(1))) throw DomainError("closed_form route needs s = 1");
        return closed_form_result(z_at_one(p.x, p.cfg));
    }
  }
  check_open_unit(p.x);
  if (auto k = near_positive_integer(s, 1e-8)) {
    if (*k == 1) return closed_form_result(z_at_one(p.x, p.cfg));
    WorkingPrecision wp(128);
    if (p.x.to_double() > std::exp(-kTwoPi)) return z_integer(*k, p.x, p.cfg);
    return z_via_li({Complex(*k), p.x, p.cfg});
  }
  WorkingPrecision wp(128);
  const bool expansion_ok = log(p.x) > -(pi() * 2L);
  if (s.re.sign() > 0) {
    if (li_series_terms_estimate(s, p.x, p.cfg) <= p.cfg.max_terms) {
      SeriesResult r = z_via_li(p);
      if (r.converged || !expansion_ok) return r;
    }
    if (expansion_ok) return z_expansion(p).first;
    return z_via_li(p);
  }
  if (expansion_ok) return z_expansion(p).first;
  return z_direct(p);
}

}  // namespace polyzeta
