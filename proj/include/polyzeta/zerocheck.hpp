#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "polyzeta/config.hpp"

namespace polyzeta {

enum class ZeroSource { file, refined, user };
const char* zero_source_name(ZeroSource s);

struct ZeroCandidate {
  Complex s;
  ZeroSource source = ZeroSource::user;
  std::optional<Real> residual;  // |zeta(s)|
};

// One positive decimal t per line, '#' starts a comment; yields s = 1/2 + it.
std::vector<ZeroCandidate> load_zeros(const std::string& path);
std::vector<ZeroCandidate> parse_zeros(std::istream& in);

// Secant iteration on Hardy's function Z(t) = e^{i theta(t)} zeta(1/2 + it),
// until |zeta| <= 10^{6-digits}. Needs |zeta(seed)| < 1/2.
ZeroCandidate refine_zero(const ZeroCandidate& seed, const EvalConfig& cfg);

enum class ProbeMode { raw, zeta_subtracted, corrected };
const char* probe_mode_name(ProbeMode m);
ProbeMode probe_mode_from_name(const std::string& name);  // accepts '-' or '_'

enum class ProbeDenominator { theorem, corollary };  // (1-x)(-log x)^{s-1} or (1-x)^s

struct ProbeOptions {
  ProbeMode mode = ProbeMode::zeta_subtracted;
  ProbeDenominator denominator = ProbeDenominator::theorem;
  int corrections = 4;  // shift terms removed in corrected mode
};

struct ProbeEntry {
  Real x;
  Complex z;
  Complex numerator;
  Complex ratio;
  Real abs_error;
  Real rel_error;
  Route route = Route::li_integral;
  bool converged = true;
  std::string flag;  // empty, or why the entry is suspect
};

struct ProbeReport {
  Complex s;
  std::vector<Real> x_values;
  std::vector<Complex> ratios;
  Complex target;  // 2(s-1)Gamma(1-s)
  std::vector<Real> abs_errors;
  double decay_exponent_fit = 0;
  ProbeMode mode = ProbeMode::zeta_subtracted;
  ProbeDenominator denominator = ProbeDenominator::theorem;
  int corrections = 0;
  std::vector<ProbeEntry> entries;
  std::vector<std::string> notes;
};

ProbeReport probe_ratio(const Complex& s, const std::vector<Real>& x_seq, const ProbeOptions& opt,
                        const EvalConfig& cfg);

// 2(s-1)Gamma(1-s)
Complex probe_target(const Complex& s, const EvalConfig& cfg);
// 2(s-1)Gamma(1-s)(1-x)^s
Complex rate_model(const Complex& s, const Real& x, const EvalConfig& cfg);

// x = 1 - 10^{-m}, m = 1..m_max
std::vector<Real> default_x_sequence(int m_max, const EvalConfig& cfg);

// Least-squares slope of log|e| against log(1-x); skips zero errors.
double fit_decay_exponent(const std::vector<Real>& x, const std::vector<Real>& err);

}  // namespace polyzeta
