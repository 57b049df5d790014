#pragma once

#include "polyzeta/config.hpp"

namespace polyzeta {

// Closed-form model of sum_{n>N} sigma_n(s,x)/(n+1), taking
// sigma_n ~ (log n)^{s-1}/(n Gamma(s)): the integral of that model from N to
// infinity, sum_j (-1)^{j-1} j^{-s} Gamma(s, j log N) / Gamma(s), plus the
// Euler-Maclaurin boundary corrections. Zero when 1/Gamma(s) vanishes.
Complex z_tail_model(const Complex& s, long N, const EvalConfig& cfg);

// Size of the first neglected correction,
// |log x + gamma| |1/Gamma(s-1)| Gamma(re(s) - 1, log N).
Real z_tail_correction_bound(const Complex& s, const Real& x, long N, const EvalConfig& cfg);

}  // namespace polyzeta
