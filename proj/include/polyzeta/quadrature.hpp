#pragma once

#include <functional>

#include "polyzeta/config.hpp"

namespace polyzeta {

// Integrand over (0, inf). Receives t together with log t, which the
// substitution produces exactly and which integrands with t^{s-1} need anyway.
using HalfLineIntegrand = std::function<Complex(const Real& t, const Real& log_t)>;

// Exp-sinh rule t = exp((pi/2) sinh u), trapezoid in u with step halving.
// extra_digits raises the internal precision for integrands whose value is
// much smaller than their magnitude (oscillation).
SeriesResult integrate_halfline(const HalfLineIntegrand& f, const Complex& singular_exponent,
                                const EvalConfig& cfg, int extra_digits = 0);

}  // namespace polyzeta
