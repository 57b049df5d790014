#pragma once

#include <string>

#include "polyzeta/complex.hpp"
#include "polyzeta/errors.hpp"

namespace polyzeta {

struct EvalConfig {
  int digits = 50;
  Real target_tol{std::string_view("1e-30"), 64};
  long max_terms = 100000;
  int quad_levels = 12;
  int expansion_terms = 80;
  // Ceiling on the elevated precision any cancellation-prone sum may request.
  long max_work_digits = 4000;

  void validate() const;  // throws UsageError
  int guarded_digits() const { return digits + 6; }
  long guarded_bits() const { return bits_for_digits(guarded_digits()); }
  double tol_log10() const { return target_tol.log10_abs(); }
  Real tol() const { return target_tol.rounded(working_bits()); }

  EvalConfig with_digits(int d) const;
};

enum class Route { direct, li_integral, expansion, integer_case, closed_form, bilateral };

const char* route_name(Route r);
Route route_from_name(const std::string& name);  // throws UsageError

struct SeriesResult {
  Complex value;
  long terms_used = 0;
  Real tail_estimate;  // absolute
  bool converged = false;
  Route route = Route::direct;
  long work_digits = 0;  // precision actually used
};

// Sets converged from tail_estimate against target_tol.
void settle(SeriesResult& r, const EvalConfig& cfg);

}  // namespace polyzeta
