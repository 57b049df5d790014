#pragma once

#include "polyzeta/config.hpp"

namespace polyzeta {

struct SigmaParams {
  long n = 1;
  Complex s;
  Real x;  // 0 < x <= 1
};

struct StirlingValue {
  Complex alpha;
  long j = 1;
  Complex value;
};

enum class AsymptoticOrder { one_term, two_term };

// sigma_n(s,x) = sum_{k<n} (-1)^k C(n-1,k) x^{k+1} (k+1)^{-s}, summed at the
// precision its cancellation demands. Throws PrecisionError when that exceeds
// cfg.max_work_digits.
Complex sigma_direct(const SigmaParams& p, const EvalConfig& cfg);

// Decimal digits sigma_direct expects to carry for these parameters.
long sigma_budget_digits(long n, const Complex& s, const Real& x, const EvalConfig& cfg);

// S{alpha, j} = (1/j!) sum_{m=1}^{j} (-1)^{j-m} C(j,m) m^alpha
StirlingValue stirling_generalized(const Complex& alpha, long j, const EvalConfig& cfg);

// sigma_n = (-1/n) sum_j (-1)^j j! S{1-s,j} C(n,j) x^j (1-x)^{n-j}
Complex sigma_stirling(const SigmaParams& p, const EvalConfig& cfg);

// (1/Gamma(s)) int_0^inf (1 - x e^{-t})^{n-1} x e^{-t} t^{s-1} dt, re(s) > 0, 0 < x < 1
SeriesResult sigma_integral(const SigmaParams& p, const EvalConfig& cfg);

// S_n(s) = sigma_n(s, 1)
Complex s_n(long n, const Complex& s, const EvalConfig& cfg);

Complex sigma_asymptotic(const SigmaParams& p, AsymptoticOrder order, const EvalConfig& cfg);

// Partial sums Z_N = sum_{n<=N} sigma_n(s,x)/(n+1) and Z_{N/2}, by swapping the
// order of summation: Z_N = sum_k (-1)^k c_k x^{k+1} (k+1)^{-s} with
// c_k = sum_{n=k+1}^{N} C(n-1,k)/(n+1).
struct WeightedPartialSums {
  Complex full;
  Complex half;
  long n_full = 0;
  long n_half = 0;
  long work_digits = 0;
};
WeightedPartialSums sigma_weighted_partial_sums(const Complex& s, const Real& x, long N,
                                                const EvalConfig& cfg);
// Digits the partial sum to N needs; used to choose a feasible N.
long weighted_sum_budget_digits(const Complex& s, const Real& x, long N, const EvalConfig& cfg);

}  // namespace polyzeta
