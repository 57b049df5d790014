#include "polyzeta/specfun.hpp"
#include "polyzeta/zfunction.hpp"

namespace polyzeta {

// (s-1) zeta(s) = sum_n S_n(s)/(n+1) is the direct Z series at x = 1.
SeriesResult zeta_hasse(const Complex& s, const EvalConfig& cfg) {
  SeriesResult r = z_direct_series(s, Real(1), cfg);
  r.route = Route::direct;
  return r;
}

}  // namespace polyzeta
