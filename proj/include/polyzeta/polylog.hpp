#pragma once

#include "polyzeta/config.hpp"

namespace polyzeta {

struct LiParams {
  Complex s;
  Real x;  // 0 < x < 1
  EvalConfig cfg;
};

// Li_s(x) = sum_{n>=1} x^n n^{-s}; any s.
SeriesResult li_series(const LiParams& p);
// Terms li_series expects to need; may exceed cfg.max_terms.
long li_series_terms_estimate(const Complex& s, const Real& x, const EvalConfig& cfg);

// Li_s(x) = (x/Gamma(s)) int_0^inf t^{s-1}/(e^t - x) dt, re(s) > 0.
SeriesResult li_integral(const LiParams& p);

// J(s,x) = (1/Gamma(s)) int_0^inf x e^{-t} t^{s-1} / (1 - x e^{-t})^2 dt, re(s) > 0.
// Equals Li_{s-1}(x).
SeriesResult j_integral(const LiParams& p);

struct Prop21Check {
  Real residual;   // |(s-1) Li - Z - log x J| / max(1, |(s-1) Li|)
  Real bound;      // 10 x the combined tail estimates on the same scale
  Complex li;
  Complex z;
  Complex j;
  bool passed = false;
};

// (s-1) Li_s(x) = Z(s,x) + log x J(s,x), with Z from the direct series.
Prop21Check check_prop21(const Complex& s, const Real& x, const EvalConfig& cfg);

}  // namespace polyzeta
