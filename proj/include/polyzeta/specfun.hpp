#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "polyzeta/config.hpp"

namespace polyzeta {

// Spouge approximation, reflected for re(s) < 1/2. Throws PoleError at 0, -1, -2, ...
Complex gamma(const Complex& s, const EvalConfig& cfg);
// 1/Gamma(s); exactly zero at the poles of Gamma.
Complex rgamma(const Complex& s, const EvalConfig& cfg);
// log10(Gamma(re s) / |Gamma(s)|) for re(s) > 0: digits an integrand carrying
// t^{s-1} loses to oscillation.
double gamma_oscillation_loss(const Complex& s);

// Globally valid zeta: Borwein's alternating-series acceleration for re(s) > -2,
// the functional equation below that, Euler-Maclaurin where 1 - 2^{1-s} vanishes.
Complex zeta(const Complex& s, const EvalConfig& cfg);
// Euler-Maclaurin evaluation, kept callable as an independent check.
Complex zeta_euler_maclaurin(const Complex& s, const EvalConfig& cfg);
// (s-1) zeta(s) from the globally convergent series sum S_n(s)/(n+1).
SeriesResult zeta_hasse(const Complex& s, const EvalConfig& cfg);

// Gamma(s, a) = int_a^inf u^{s-1} e^{-u} du for a >= 0 (a = 0 needs re(s) > 0).
Complex upper_incomplete_gamma(const Complex& s, const Real& a, const EvalConfig& cfg);

mpq_class harmonic(long k);
mpz_class binomial(long n, long k);
mpq_class bernoulli(long n);  // B_1 = -1/2
Real euler_mascheroni(const EvalConfig& cfg);

// zeta(s - shift) memoized per (s, shift, digits).
class ZetaCache {
 public:
  Complex get(const Complex& s, long shift, const EvalConfig& cfg);
  size_t size() const;
  void clear();

 private:
  mutable std::mutex mu_;
  std::map<std::tuple<std::string, long, int>, Complex> entries_;
};

ZetaCache& shared_zeta_cache();

// True when s is exactly 0, -1, -2, ...
bool is_nonpositive_integer(const Complex& s);
// True when s is exactly 1, 2, 3, ...
bool is_positive_integer(const Complex& s);

}  // namespace polyzeta
