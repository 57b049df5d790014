#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyzeta/config.hpp"

namespace polyzeta {

struct ZParams {
  Complex s;
  Real x;  // 0 < x < 1
  EvalConfig cfg;
};

// Terms of Z = sum_{n>=0} (log x)^n/n! [(s-1) zeta(s-n) - log x zeta(s-n-1)],
// with the n = 0 pieces split out. gamma_term is the difference of the two
// Gamma(1-s) singular contributions, which cancel; it is carried so that the
// cancellation is visible.
struct ExpansionTerms {
  Complex leading;     // (s-1) zeta(s)
  Complex gamma_term;  // (s-1)Gamma(1-s)(-log x)^{s-1} - log x Gamma(2-s)(-log x)^{s-2}
  Complex log_term;    // -log x zeta(s-1)
  std::vector<Complex> shift_terms;  // n = 1, 2, ...
  long n_used = 0;

  // Fixed-order sum; equals the reported value exactly.
  Complex sum() const;
};

// Partial sum of sigma_n(s,x)/(n+1) to N = min(max_terms, largest precision
// feasible N), plus the closed-form tail model.
SeriesResult z_direct(const ZParams& p);
// Same series, admitting x = 1 (where it sums to (s-1) zeta(s)).
SeriesResult z_direct_series(const Complex& s, const Real& x, const EvalConfig& cfg);
// Largest N <= cfg.max_terms whose precision budget fits cfg.max_work_digits.
long z_direct_feasible_terms(const Complex& s, const Real& x, const EvalConfig& cfg);

// Z = (s-1) Li_s(x) - log x J(s,x), re(s) > 0.
SeriesResult z_via_li(const ZParams& p);

// Zeta-value expansion; s not a positive integer, e^{-2 pi} < x < 1.
std::pair<SeriesResult, ExpansionTerms> z_expansion(const ZParams& p);

// (s-1)Gamma(1-s) sum_{|n|<=n_max} [w_n^{s-1} + log x w_n^{s-2}], w_n = -log x + 2 pi n i; re(s) < 0.
SeriesResult z_bilateral(const ZParams& p, long n_max);

// Integer s = k >= 2.
SeriesResult z_integer(long k, const Real& x, const EvalConfig& cfg);

// Z(1,x) = -x log x / (1 - x)
Complex z_at_one(const Real& x, const EvalConfig& cfg);

// The x -> 1 remainder model (s-1)Gamma(1-s)(1-x^2)(-log x)^{s-1}; for integer
// s = k >= 2 the matching (1-x^2)(log x)^{k-1}/(k-1)! [H_{k-1} - log(-log x)].
Complex gamma_term_model(const Complex& s, const Real& x, const EvalConfig& cfg);

// Route dispatch: s = 1 -> closed form; integer s >= 2 (or within 1e-8 of one)
// -> integer case; re(s) > 0 -> Li route, falling back to the expansion;
// otherwise the expansion.
SeriesResult evaluate(const ZParams& p, std::optional<Route> route = std::nullopt);

}  // namespace polyzeta
