#include "polyzeta/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "polyzeta/polylog.hpp"
#include "polyzeta/sigma.hpp"
#include "polyzeta/specfun.hpp"
#include "polyzeta/zfunction.hpp"

namespace polyzeta {

namespace {

using Suite = std::function<void(SuiteReport&, const EvalConfig&, const SuiteOptions&)>;

Real X(const char* text, const EvalConfig& cfg) { return Real(std::string_view(text), cfg.guarded_bits() + 64); }
Complex S(const char* text) { return Complex::parse(text); }

Real rel_diff(const Complex& a, const Complex& b) {
  Real d = abs(a - b);
  Real m = abs(b);
  return m.is_zero() ? d : d / m;
}

void add(SuiteReport& rep, std::string name, const Real& measured, const Real& bound, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured.rounded(64);
  c.bound = bound.rounded(64);
  c.passed = measured.is_finite() && measured <= bound;
  c.detail = std::move(detail);
  rep.checks.push_back(std::move(c));
}

void add_failure(SuiteReport& rep, std::string name, const Error& e) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = Real(0);
  c.bound = Real(0);
  c.passed = false;
  c.detail = std::string(error_code(e.kind())) + ": " + e.what();
  rep.checks.push_back(std::move(c));
}

std::string key(const char* s, const char* x) { return std::string("s=") + s + " x=" + x; }

// sigma_direct = sigma_stirling, the endpoint identity, the integral, boundedness
void sigma_routes(SuiteReport& rep, const EvalConfig& cfg, const SuiteOptions&) {
  WorkingPrecision wp(cfg.guarded_bits());
  const Real tight = pow10(4 - cfg.digits);
  const char* grid_s[] = {"-1.5", "-1.5+2i", "-1.5+14i", "0.5", "0.5+2i", "0.5+14i", "2.5", "2.5+2i", "2.5+14i"};
  for (const char* ss : grid_s)
    for (const char* xs : {"0.1", "0.5", "0.9", "1"}) {
      Real worst(0);
      for (long n = 1; n <= 30; ++n) {
        SigmaParams p{n, S(ss), X(xs, cfg)};
        worst = max(worst, rel_diff(sigma_stirling(p, cfg), sigma_direct(p, cfg)));
      }
      add(rep, "direct=stirling n<=30 " + key(ss, xs), worst, tight);
    }
  for (const char* ss : grid_s) {
    Real worst(0);
    for (long n = 1; n <= 20; ++n) {
      Complex s = S(ss);
      Complex st = stirling_generalized(Complex(1) - s, n, cfg).value;
      Real fact(1);
      for (long i = 2; i < n; ++i) fact = fact * i;
      Complex rhs = st * fact * ((n + 1) % 2 == 0 ? 1L : -1L);  // (-1)^{n+1} (n-1)!
      worst = max(worst, rel_diff(rhs, s_n(n, s, cfg)));
    }
    add(rep, std::string("endpoint sigma_n(s,1)=(-1)^(n+1)(n-1)!S{1-s,n} n<=20 s=") + ss, worst, tight);
  }
  const Real quad = max(cfg.tol() * 100L, pow10(4 - cfg.digits));
  for (const char* ss : {"0.5", "1.5", "2.5"})
    for (const char* xs : {"0.2", "0.5", "0.8"}) {
      Real worst(0);
      for (long n = 1; n <= 20; ++n) {
        SigmaParams p{n, S(ss), X(xs, cfg)};
        SeriesResult r = sigma_integral(p, cfg);
        Complex d = sigma_direct(p, cfg);
        Real scale = max(abs(d), Real(1e-300));
        worst = max(worst, max(Real(0), abs(r.value - d) - r.tail_estimate) / scale);
      }
      add(rep, "direct=integral n<=20 " + key(ss, xs), worst, quad, "measured excess over the quadrature estimate");
    }
  for (const char* ss : {"0.5", "1.5", "2.5"}) {
    Real worst(-1e300);
    for (long n = 2; n <= 30; ++n)
      for (const char* xs : {"0.1", "0.3", "0.5", "0.7", "0.9", "1"}) {
        Complex s = S(ss);
        Real x = X(xs, cfg);
        Real lhs = abs(sigma_direct({n, s, x}, cfg));
        Real rhs = pow(Real(2), s.re) * sqrt(x) / sqrt(Real(2 * n - 1));
        worst = max(worst, lhs / rhs);
      }
    add(rep, std::string("bound |sigma_n| <= 2^s sqrt(x)/sqrt(2n-1) s=") + ss, worst, Real(1),
        "measured = max |sigma_n| / bound");
  }
  for (long k = 1; k <= 3; ++k) {
    Real prev(-1), worst_rise(0);
    for (long n = k + 2; n <= 200; ++n) {
      auto f = [&](const Real& x) { return abs(sigma_direct({n, Complex(-k), x}, cfg)); };
      // grid, then golden-section refinement of every local maximum
      std::vector<Real> v(101);
      for (long i = 1; i < 100; ++i) v[static_cast<size_t>(i)] = f(Real(i) / 100L);
      v[100] = f(Real(1));
      Real sup(0);
      const Real g = (sqrt(Real(5)) - Real(1)) / 2L;
      for (long i = 1; i < 100; ++i) {
        sup = max(sup, v[static_cast<size_t>(i)]);
        if (v[static_cast<size_t>(i)] < v[static_cast<size_t>(i - 1)] || v[static_cast<size_t>(i)] < v[static_cast<size_t>(i + 1)])
          continue;
        Real a = Real(i - 1) / 100L, b = Real(i + 1) / 100L;
        for (int it = 0; it < 40; ++it) {
          Real m1 = b - g * (b - a), m2 = a + g * (b - a);
          if (f(m1) > f(m2)) b = m2;
          else a = m1;
        }
        sup = max(sup, f((a + b) / 2L));
      }
      if (prev.sign() > 0) worst_rise = max(worst_rise, (sup - prev) / prev);
      prev = sup;
    }
    add(rep, "sup_x |sigma_n(-" + std::to_string(k) + ",x)| non-increasing for n in (k+1, 200]", worst_rise,
        pow10(4 - cfg.digits), "measured = largest relative increase between consecutive n");
  }
}

void prop21(SuiteReport& rep, const EvalConfig& cfg0, const SuiteOptions& opt) {
  EvalConfig cfg = cfg0;
  cfg.max_terms = opt.direct_terms;
  WorkingPrecision wp(cfg.guarded_bits());
  for (const char* re : {"0.5", "1.5", "2.5"})
    for (const char* im : {"", "+3i"})
      for (const char* xs : {"0.2", "0.5", "0.8"}) {
        std::string ss = std::string(re) + im;
        try {
          Prop21Check c = check_prop21(S(ss.c_str()), X(xs, cfg), cfg);
          add(rep, "(s-1)Li - Z - log x J " + key(ss.c_str(), xs), c.residual, c.bound);
        } catch (const Error& e) {
          add_failure(rep, "(s-1)Li - Z - log x J " + key(ss.c_str(), xs), e);
        }
      }
}

void z_routes(SuiteReport& rep, const EvalConfig& cfg0, const SuiteOptions& opt) {
  EvalConfig cfg = cfg0;
  cfg.max_terms = opt.direct_terms;
  WorkingPrecision wp(cfg.guarded_bits());
  const char* xs5[] = {"0.1", "0.3", "0.5", "0.7", "0.9"};
  for (const char* ss : {"0.5", "2.5", "0.5+3i", "1.5+14i"})
    for (const char* xs : xs5) {
      Complex s = S(ss);
      Real x = X(xs, cfg);
      SeriesResult ex = z_expansion({s, x, cfg}).first;
      SeriesResult li = z_via_li({s, x, cfg});
      add(rep, "li=expansion " + key(ss, xs), rel_diff(li.value, ex.value), Real(1e-10));
      SeriesResult d = z_direct({s, x, cfg});
      Real diff = abs(d.value - ex.value);
      Real allowed = max(abs(ex.value) * Real(1e-4), d.tail_estimate);
      add(rep, "direct=expansion " + key(ss, xs), diff, allowed,
          "absolute; bound = max(1e-4 |Z|, direct tail); N = " + std::to_string(d.terms_used) +
              ", digits = " + std::to_string(d.work_digits) + (diff > d.tail_estimate ? "" : ", within tail"));
    }
  for (const char* ss : {"-0.5", "-1.5+2i"})
    for (const char* xs : {"0.3", "0.7"}) {
      Complex s = S(ss);
      Real x = X(xs, cfg);
      SeriesResult ex = z_expansion({s, x, cfg}).first;
      SeriesResult d = z_direct({s, x, cfg});
      add(rep, "direct=expansion " + key(ss, xs), abs(d.value - ex.value), d.tail_estimate + ex.tail_estimate,
          "absolute; bound = combined tails");
      if (s.re < Real(0)) {
        SeriesResult b = z_bilateral({s, x, cfg}, 10000);
        add(rep, "bilateral=expansion " + key(ss, xs), abs(b.value - ex.value), b.tail_estimate + ex.tail_estimate,
            "absolute; n_max = 10000");
      }
    }
  for (const char* ss : {"0", "-1", "-2"})
    for (const char* xs : {"0.3", "0.7"}) {
      Complex s = S(ss);
      Real x = X(xs, cfg);
      SeriesResult d = z_direct({s, x, cfg});
      SeriesResult ex = z_expansion({s, x, cfg}).first;
      add(rep, "entire: direct=expansion " + key(ss, xs), abs(d.value - ex.value), d.tail_estimate + ex.tail_estimate,
          "absolute; Gamma(1-s) is finite here, the poles sit at s = 1, 2, ...");
    }
  for (const char* ss : {"0.5", "-1.5+2i", "2.5+3i"})
    for (const char* xs : {"0.2", "0.9"}) {
      auto [r, terms] = z_expansion({S(ss), X(xs, cfg), cfg});
      Complex sum = terms.sum();
      bool same = mpfr_equal_p(sum.re.raw(), r.value.re.raw()) && mpfr_equal_p(sum.im.raw(), r.value.im.raw());
      add(rep, "expansion terms sum to value " + key(ss, xs), Real(same ? 0 : 1), Real(0), "bitwise");
    }
  // closed forms carry absolute thresholds, so they run at no less than 50 digits
  {
    EvalConfig cfg = cfg0.with_digits(std::max(cfg0.digits, 50));
    cfg.max_terms = opt.direct_terms;
    if (cfg.target_tol > Real(1e-40)) cfg.target_tol = Real(std::string_view("1e-40"), 64);
    WorkingPrecision wp(cfg.guarded_bits());
    Real x = X("0.5", cfg);
    Complex closed = z_at_one(x, cfg);
    add(rep, "z_at_one(0.5) = log 2", rel_diff(closed, Complex(log(Real(2)))), Real(1e-25));
    SeriesResult d = z_direct({Complex(1), x, cfg});
    add(rep, "z_at_one(0.5) = direct series at s = 1", rel_diff(d.value, closed), Real(1e-25));
    SeriesResult li2 = li_series({Complex(2), x, cfg});
    Real l2 = log(Real(2));
    Real ref = pi() * pi() / 12L - l2 * l2 / 2L;
    add(rep, "Li_2(0.5) = pi^2/12 - log(2)^2/2", rel_diff(li2.value, Complex(ref)), Real(1e-25));
    add(rep, "zeta(2) = pi^2/6", rel_diff(zeta(Complex(2), cfg), Complex(pi() * pi() / 6L)), Real(1e-40));
    add(rep, "zeta(0) = -1/2", rel_diff(zeta(Complex(0), cfg), Complex(Real(-0.5))), Real(1e-40));
    add(rep, "zeta(-1) = -1/12", rel_diff(zeta(Complex(-1), cfg), Complex(Real(-1) / 12L)), Real(1e-40));
    SeriesResult zh = zeta_hasse(Complex(2), cfg);
    add(rep, "zeta_hasse(2) = zeta(2)", abs(zh.value - zeta(Complex(2), cfg)), zh.tail_estimate, "absolute");
  }
  for (auto [k, xs] : {std::pair<long, const char*>{2, "0.5"}, {3, "0.9"}, {2, "0.1"}, {3, "0.3"}}) {
    Real x = X(xs, cfg);
    SeriesResult zi = z_integer(k, x, cfg);
    SeriesResult li = z_via_li({Complex(k), x, cfg});
    add(rep, "integer case = li route s=" + std::to_string(k) + " x=" + xs, rel_diff(zi.value, li.value), Real(1e-10));
  }
  {
    SeriesResult near = z_via_li({Complex(Real(1) + pow10(-6)), X("0.5", cfg), cfg});
    add(rep, "z_via_li(1+1e-6, 0.5) near z_at_one(0.5)", abs(near.value - z_at_one(X("0.5", cfg), cfg)), Real(1e-4),
        "absolute");
  }
}

// |Z(s, 1-10^-m) - (s-1)zeta(s)| against the gamma-term model
void limit_law(SuiteReport& rep, const EvalConfig& cfg, const SuiteOptions&) {
  WorkingPrecision wp(cfg.guarded_bits());
  for (const char* ss : {"2", "0.5+3i"}) {
    Complex s = S(ss);
    Complex limit = (s - Complex(1)) * zeta(s, cfg);
    std::vector<Real> residual;
    std::vector<Complex> model, diff;
    for (int m = 1; m <= 6; ++m) {
      Real x = Real(1) - pow10(-m);
      SeriesResult z = is_positive_integer(s) ? z_integer(s.re.to_long(), x, cfg) : z_expansion({s, x, cfg}).first;
      diff.push_back(z.value - limit);
      residual.push_back(abs(diff.back()));
      model.push_back(gamma_term_model(s, x, cfg));
    }
    Real rise(-1e300);
    for (size_t i = 1; i < residual.size(); ++i) rise = max(rise, residual[i] - residual[i - 1]);
    add(rep, std::string("residual decreases toward (s-1)zeta(s) s=") + ss, rise, Real(0),
        "measured = largest increase, x = 1 - 10^-m, m = 1..6");
    add(rep, std::string("|Z(s,1-1e-6) - (s-1)zeta(s)| <= 2|gamma term| s=") + ss, residual[5] / abs(model[5]), Real(2),
        "measured = residual / |gamma term model|; residual " + residual[5].to_string(4) + ", model " +
            abs(model[5]).to_string(4));
    add(rep, std::string("residual at 1-1e-3 matches gamma term within 5% s=") + ss, rel_diff(diff[2], model[2]),
        Real(0.05), "residual " + residual[2].to_string(4) + ", model " + abs(model[2]).to_string(4));
  }
}

void asymptotics(SuiteReport& rep, const EvalConfig& cfg0, const SuiteOptions& opt) {
  EvalConfig cfg = cfg0.with_digits(std::min(cfg0.digits, 30));
  cfg.target_tol = Real(std::string_view("1e-20"), 64);
  cfg.max_work_digits = std::max(cfg0.max_work_digits, 30000L);
  WorkingPrecision wp(cfg.guarded_bits());
  const long ns[] = {1000, 10000, 100000};
  auto reference = [&](const SigmaParams& p, SuiteReport& r, const std::string& tag) {
    if (p.n <= 10000 || opt.expensive) {
      Complex d = sigma_direct(p, cfg);
      if (p.s.re.sign() > 0) {
        SeriesResult q = sigma_integral(p, cfg);
        add(r, "direct=integral n=" + std::to_string(p.n) + " " + tag, rel_diff(q.value, d), Real(1e-15));
      }
      return d;
    }
    return sigma_integral(p, cfg).value;
  };
  struct Point {
    const char* s;
    bool integer;
  };
  for (Point pt : {Point{"2.5", false}, Point{"0.5+3i", false}, Point{"1", true}, Point{"2", true}, Point{"3", true}})
    for (const char* xs : {"0.3", "0.7"}) {
      std::string tag = key(pt.s, xs);
      std::vector<Real> err;
      for (long n : ns) {
        SigmaParams p{n, S(pt.s), X(xs, cfg)};
        Complex ref = reference(p, rep, tag);
        Complex est = sigma_asymptotic(p, AsymptoticOrder::two_term, cfg);
        err.push_back(rel_diff(est, ref));
      }
      if (!pt.integer) {
        Real rise(-1e300);
        for (size_t i = 1; i < err.size(); ++i) rise = max(rise, err[i] - err[i - 1]);
        add(rep, "two-term error decreases over n=1e3,1e4,1e5 " + tag, rise, Real(0),
            "errors " + err[0].to_string(4) + ", " + err[1].to_string(4) + ", " + err[2].to_string(4));
      }
      add(rep, "two-term estimate within 5% at n=1e5 " + tag, err.back(), Real(0.05),
          "reference: " + std::string(opt.expensive ? "direct sum" : "integral (direct sum cross-checked to n=1e4)"));
    }
}

void bilateral(SuiteReport& rep, const EvalConfig& cfg, const SuiteOptions&) {
  WorkingPrecision wp(cfg.guarded_bits());
  {
    ZParams p{S("-1.5"), X("0.5", cfg), cfg};
    SeriesResult b = z_bilateral(p, 10000);
    SeriesResult ex = z_expansion(p).first;
    add(rep, "bilateral(n_max=1e4) = expansion s=-1.5 x=0.5", abs(b.value - ex.value), b.tail_estimate,
        "absolute; bound = algebraic tail estimate");
    // n = 0 term alone: (s-1)Gamma(1-s)[(-log x)^{s-1} + log x (-log x)^{s-2}]
    SeriesResult b0 = z_bilateral(p, 1);
    Real L = log(p.x);
    Complex sm1 = p.s - Complex(1);
    Complex pref = sm1 * gamma(Complex(1) - p.s, cfg);
    Complex t0 = pref * (rpow(-L, sm1) + rpow(-L, p.s - Complex(2)) * L);
    Complex w1(-L, pi() * 2L), w2(-L, -(pi() * 2L));
    Complex t1 = pref * (cpow(w1, sm1) + cpow(w1, p.s - Complex(2)) * L + cpow(w2, sm1) + cpow(w2, p.s - Complex(2)) * L);
    add(rep, "bilateral term recomputation |n|<=1 s=-1.5 x=0.5", rel_diff(b0.value, t0 + t1), pow10(4 - cfg.digits));
    add(rep, "bilateral n=0 term vanishes s=-1.5 x=0.5", abs(t0), pow10(4 - cfg.digits) * abs(pref));
  }
  {
    ZParams p{S("-2.5"), X("0.9", cfg), cfg};
    SeriesResult a = z_bilateral(p, 5000);
    SeriesResult b = z_bilateral(p, 10000);
    add(rep, "bilateral n_max vs 2 n_max within tail s=-2.5 x=0.9", abs(a.value - b.value), a.tail_estimate, "absolute");
  }
  {
    ZParams p{S("-1.5+2i"), X("0.3", cfg), cfg};
    SeriesResult b = z_bilateral(p, 10000);
    SeriesResult ex = z_expansion(p).first;
    add(rep, "bilateral(n_max=1e4) = expansion s=-1.5+2i x=0.3", abs(b.value - ex.value), b.tail_estimate, "absolute");
  }
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> r = {
      {"sigma-routes", sigma_routes}, {"prop21", prop21},         {"z-routes", z_routes},
      {"limit-law", limit_law},       {"asymptotics", asymptotics}, {"bilateral", bilateral},
  };
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"sigma-routes", "prop21", "z-routes", "limit-law", "asymptotics",
                                                 "bilateral"};
  return names;
}

SuiteReport run_suite(const std::string& name, const EvalConfig& cfg, const SuiteOptions& opt) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UsageError("unknown suite '" + name + "'");
  SuiteReport rep;
  rep.suite = name;
  rep.digits = cfg.digits;
  it->second(rep, cfg, opt);
  return rep;
}

}  // namespace polyzeta
