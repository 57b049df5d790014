#include "polyzeta/zerocheck.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

#include "polyzeta/specfun.hpp"
#include "polyzeta/zfunction.hpp"

namespace polyzeta {

namespace {

// e^{i theta(t)} zeta(1/2 + it), real for real t
struct HardyValue {
  Real z;
  Real zeta_abs;
};

HardyValue hardy(const Real& t, const EvalConfig& cfg) {
  WorkingPrecision wp(cfg.guarded_bits());
  Complex s(Real(0.5), t);
  Complex zt = zeta(s, cfg);
  Complex g = gamma(Complex(Real(0.25), t / 2L), cfg);
  Complex phase = g / abs(g) * rpow(pi(), Complex(Real(0), -(t / 2L)));
  return {(phase * zt).re, abs(zt)};
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string format_real(const Real& r, int digits) { return r.to_string(digits); }

}  // namespace

const char* zero_source_name(ZeroSource s) {
  switch (s) {
    case ZeroSource::file: return "file";
    case ZeroSource::refined: return "refined";
    case ZeroSource::user: return "user";
  }
  return "user";
}

const char* probe_mode_name(ProbeMode m) {
  switch (m) {
    case ProbeMode::raw: return "raw";
    case ProbeMode::zeta_subtracted: return "zeta-subtracted";
    case ProbeMode::corrected: return "corrected";
  }
  return "raw";
}

ProbeMode probe_mode_from_name(const std::string& name) {
  std::string n = name;
  std::replace(n.begin(), n.end(), '_', '-');
  for (ProbeMode m : {ProbeMode::raw, ProbeMode::zeta_subtracted, ProbeMode::corrected})
    if (n == probe_mode_name(m)) return m;
  throw UsageError("unknown probe mode '" + name + "'");
}

std::vector<ZeroCandidate> parse_zeros(std::istream& in) {
  static const std::regex decimal(R"([0-9]+(\.[0-9]*)?([eE][+-]?[0-9]+)?|\.[0-9]+([eE][+-]?[0-9]+)?)");
  std::vector<ZeroCandidate> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    if (!std::regex_match(body, decimal)) throw ParseError(lineno, "not a positive decimal: '" + body + "'");
    long bits = std::max(256L, bits_for_digits(static_cast<long>(body.size()) + 10));
    Real t(std::string_view(body), bits);
    if (t.sign() <= 0) throw ParseError(lineno, "zero ordinate must be positive");
    ZeroCandidate c;
    c.s = Complex(Real(0.5), t);
    c.source = ZeroSource::file;
    out.push_back(c);
  }
  return out;
}

std::vector<ZeroCandidate> load_zeros(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open zeros file '" + path + "'");
  return parse_zeros(f);
}

ZeroCandidate refine_zero(const ZeroCandidate& seed, const EvalConfig& cfg) {
  WorkingPrecision wp(cfg.guarded_bits());
  const Real thr = pow10(6 - cfg.digits);
  const Real t_seed = seed.s.im.rounded(cfg.guarded_bits());
  HardyValue h0 = hardy(t_seed, cfg);
  if (!(h0.zeta_abs < Real(0.5)))
    throw RefinementError("seed t = " + t_seed.to_string(12) + " is not near a zero: |zeta| = " +
                          h0.zeta_abs.to_string(6));
  Real t0 = t_seed;
  Real t1 = t_seed + Real(0.01);
  HardyValue h1 = hardy(t1, cfg);
  if (h0.zeta_abs <= thr) {
    t1 = t0;
    h1 = h0;
  }
  for (int it = 0; it < 64; ++it) {
    if (h1.zeta_abs <= thr) {
      ZeroCandidate out;
      out.s = Complex(Real(0.5), t1);
      out.source = ZeroSource::refined;
      out.residual = h1.zeta_abs.rounded(64);
      return out;
    }
    Real df = h1.z - h0.z;
    if (df.is_zero()) break;
    Real t2 = t1 - h1.z * (t1 - t0) / df;
    if (abs(t2 - t_seed) > Real(2))
      throw RefinementError("iteration left the neighbourhood of the seed t = " + t_seed.to_string(12));
    t0 = t1;
    h0 = h1;
    t1 = t2;
    h1 = hardy(t1, cfg);
  }
  throw RefinementError("zero refinement did not converge from t = " + t_seed.to_string(12));
}

Complex probe_target(const Complex& s, const EvalConfig& cfg) {
  WorkingPrecision wp(cfg.guarded_bits());
  return ((s - Complex(1)) * gamma(Complex(1) - s, cfg) * 2L).rounded(cfg.guarded_bits());
}

Complex rate_model(const Complex& s, const Real& x, const EvalConfig& cfg) {
  if (x.sign() < 0 || x > Real(1)) throw DomainError("rate_model needs 0 <= x <= 1");
  WorkingPrecision wp(cfg.guarded_bits());
  Real y = Real(1) - x;
  if (y.is_zero()) return Complex();
  return (probe_target(s, cfg) * rpow(y, s)).rounded(cfg.guarded_bits());
}

std::vector<Real> default_x_sequence(int m_max, const EvalConfig& cfg) {
  WorkingPrecision wp(cfg.guarded_bits());
  std::vector<Real> xs;
  for (int m = 1; m <= m_max; ++m) xs.push_back(Real(1) - pow10(-m));
  return xs;
}

double fit_decay_exponent(const std::vector<Real>& x, const std::vector<Real>& err) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < x.size() && i < err.size(); ++i) {
    if (err[i].is_zero() || !err[i].is_finite()) continue;
    WorkingPrecision wp(std::max(128L, x[i].bits()));
    double lx = (Real(1) - x[i]).log10_abs();
    double ly = err[i].log10_abs();
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return 0.0;
  double den = n * sxx - sx * sx;
  if (den == 0) return 0.0;
  return (n * sxy - sx * sy) / den;
}

ProbeReport probe_ratio(const Complex& s, const std::vector<Real>& x_seq, const ProbeOptions& opt,
                        const EvalConfig& cfg) {
  if (s.re.sign() <= 0 || s.re >= Real(1)) throw DomainError("probe needs 0 < re(s) < 1");
  if (opt.corrections < 0) throw UsageError("corrections must be non-negative");
  {
    WorkingPrecision wp(128);
    for (size_t i = 0; i < x_seq.size(); ++i) {
      if (x_seq[i] >= Real(1) || log(x_seq[i]) <= -(pi() * 2L))
        throw DomainError("probe x must lie in (e^{-2 pi}, 1)");
      if (i > 0 && !(x_seq[i] > x_seq[i - 1])) throw DomainError("probe x sequence must increase strictly");
    }
  }
  ProbeReport rep;
  rep.s = s;
  rep.mode = opt.mode;
  rep.denominator = opt.denominator;
  rep.corrections = opt.mode == ProbeMode::corrected ? opt.corrections : 0;
  rep.target = probe_target(s, cfg);
  WorkingPrecision wp(cfg.guarded_bits());
  const Complex sm1 = s - Complex(1);
  const Complex leading = sm1 * zeta(s, cfg);
  const Real tabs = abs(rep.target);

  for (const Real& xin : x_seq) {
    ProbeEntry e;
    e.x = xin.rounded(cfg.guarded_bits());
    try {
      SeriesResult z = evaluate({s, e.x, cfg});
      e.z = z.value;
      e.route = z.route;
      e.converged = z.converged;
      if (!z.converged) e.flag = "z_not_converged";
      switch (opt.mode) {
        case ProbeMode::raw: e.numerator = z.value; break;
        case ProbeMode::zeta_subtracted: e.numerator = z.value - leading; break;
        case ProbeMode::corrected: {
          ExpansionTerms terms = z_expansion({s, e.x, cfg}).second;
          Complex num = z.value - terms.leading - terms.log_term;
          const size_t m = std::min(static_cast<size_t>(opt.corrections), terms.shift_terms.size());
          for (size_t i = 0; i < m; ++i) num -= terms.shift_terms[i];
          e.numerator = num;
          break;
        }
      }
      Real y = Real(1) - e.x;
      Complex den = opt.denominator == ProbeDenominator::theorem ? rpow(-log(e.x), sm1) * y : rpow(y, s);
      e.ratio = (e.numerator / den).rounded(cfg.guarded_bits());
      e.abs_error = abs(e.ratio - rep.target).rounded(64);
      e.rel_error = tabs.is_zero() ? e.abs_error : (e.abs_error / tabs).rounded(64);
    } catch (const ConvergenceError& err) {
      e.converged = false;
      e.flag = std::string("convergence_error: ") + err.what();
      e.abs_error = Real(0);
      e.rel_error = Real(0);
    }
    rep.x_values.push_back(e.x);
    rep.ratios.push_back(e.ratio);
    rep.abs_errors.push_back(e.abs_error);
    rep.entries.push_back(e);
  }
  rep.decay_exponent_fit = fit_decay_exponent(rep.x_values, rep.abs_errors);

  // raw ratio reaches the target only once |zeta(s-1)| (1-x)^{1-re s} << |target|
  Real zs1 = abs(zeta(s - Complex(1), cfg));
  double expo = 1.0 - s.re.to_double();
  double need = (tabs.log10_abs() - 2.0 - zs1.log10_abs()) / expo;  // log10(1-x)
  std::ostringstream note;
  note << "feasibility: |2(s-1)Gamma(1-s)| = " << format_real(tabs, 6)
       << "; the zeta(s-1)(1-x)^{1-s} correction drops below 1% of it only for 1-x < 1e"
       << static_cast<long>(std::floor(need));
  if (need < -8) note << "; raw mode is infeasible at this s";
  rep.notes.push_back(note.str());
  return rep;
}

}  // namespace polyzeta
