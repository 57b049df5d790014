#include "polyzeta/config.hpp"

#include <cmath>

namespace polyzeta {

const char* error_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::usage: return "usage_error";
    case ErrorKind::domain: return "domain_error";
    case ErrorKind::pole: return "pole_error";
    case ErrorKind::precision: return "precision_error";
    case ErrorKind::parse: return "parse_error";
    case ErrorKind::convergence: return "convergence_error";
    case ErrorKind::refinement: return "refinement_error";
  }
  return "error";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::usage:
    case ErrorKind::parse: return 2;
    case ErrorKind::domain:
    case ErrorKind::pole:
    case ErrorKind::precision: return 3;
    case ErrorKind::convergence:
    case ErrorKind::refinement: return 4;
  }
  return 1;
}

void EvalConfig::validate() const {
  if (digits < 15) throw UsageError("digits must be at least 15");
  if (target_tol.sign() <= 0) throw UsageError("target_tol must be positive");
  if (tol_log10() < 6.0 - digits - 1e-9)
    throw UsageError("target_tol below 10^(6-digits); raise digits or loosen the tolerance");
  if (max_terms < 16) throw UsageError("max_terms must be at least 16");
  if (expansion_terms < 4) throw UsageError("expansion_terms must be at least 4");
  if (quad_levels < 1) throw UsageError("quad_levels must be positive");
  if (max_work_digits < digits + 6) throw UsageError("max_work_digits below guarded digits");
}

EvalConfig EvalConfig::with_digits(int d) const {
  EvalConfig c = *this;
  c.digits = d;
  return c;
}

const char* route_name(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::li_integral: return "li_integral";
    case Route::expansion: return "expansion";
    case Route::integer_case: return "integer_case";
    case Route::closed_form: return "closed_form";
    case Route::bilateral: return "bilateral";
  }
  return "direct";
}

Route route_from_name(const std::string& name) {
  for (Route r : {Route::direct, Route::li_integral, Route::expansion, Route::integer_case,
                  Route::closed_form, Route::bilateral})
    if (name == route_name(r)) return r;
  throw UsageError("unknown route '" + name + "'");
}

void settle(SeriesResult& r, const EvalConfig& cfg) {
  WorkingPrecision wp(128);
  Real scale = max(Real(1), abs(r.value));
  r.converged = r.tail_estimate.is_finite() && r.tail_estimate <= cfg.target_tol * scale;
}

}  // namespace polyzeta
