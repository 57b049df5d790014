#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "polyzeta/powers.hpp"
#include "polyzeta/sigma.hpp"

namespace polyzeta {

namespace {

constexpr double kLog2_10 = 3.321928094887362;

// log2 of |C(N,k+1)/(k+2) x^{k+1} (k+1)^{-s}|, an upper bound on the k-th swapped term
struct WeightProfile {
  std::vector<double> lt;
  double floor2 = 0;
  long guard = 0;

  long bits(long m) const {
    double b = lt[static_cast<size_t>(m - 1)] - floor2;
    return std::max(64L, static_cast<long>(std::ceil(std::max(b, 0.0))) + guard);
  }
  long top() const {
    double mx = *std::max_element(lt.begin(), lt.end());
    return std::max(64L, static_cast<long>(std::ceil(std::max(mx - floor2, 0.0))) + guard);
  }
};

WeightProfile make_profile(const Complex& s, const Real& x, long N, const EvalConfig& cfg) {
  WeightProfile pr;
  const double sigma = s.re.to_double();
  const double l2x = x.log10_abs() * kLog2_10;
  pr.lt.resize(static_cast<size_t>(N));
  double lb = std::log2(static_cast<double>(N));  // log2 C(N, 1)
  for (long k = 0; k < N; ++k) {
    pr.lt[static_cast<size_t>(k)] = lb - std::log2(k + 2.0) + (k + 1) * l2x - sigma * std::log2(k + 1.0);
    if (k + 2 <= N) lb += std::log2(static_cast<double>(N - k - 1) / static_cast<double>(k + 2));
  }
  pr.floor2 = std::min(0.0, l2x) - 4;
  pr.guard = cfg.guarded_bits() + static_cast<long>(std::ceil(std::log2(N + 1.0))) + 24;
  return pr;
}

// F_k = sum_{n=k+1}^{N} C(n-1,k)/(n+1), k = 0..N-1, from
// (k+1) F_{k-1} + k F_k = C(N,k). Each step loses about a bit relative to
// the largest weights, hence the extra N bits.
std::vector<Real> weights(long N, long bits) {
  WorkingPrecision wp(bits);
  std::vector<Real> F(static_cast<size_t>(N));
  F[static_cast<size_t>(N - 1)] = Real(1) / Real(N + 1);
  mpz_class c = N;  // C(N, N-1)
  Real cr;
  for (long k = N - 1; k >= 1; --k) {
    mpfr_set_z(cr.raw(), c.get_mpz_t(), MPFR_RNDN);
    F[static_cast<size_t>(k - 1)] = (cr - F[static_cast<size_t>(k)] * k) / (k + 1);
    c *= static_cast<unsigned long>(k);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(N - k + 1));
  }
  return F;
}

}  // namespace

long weighted_sum_budget_digits(const Complex& s, const Real& x, long N, const EvalConfig& cfg) {
  if (N < 1) throw DomainError("partial sum needs N >= 1");
  return digits_for_bits(make_profile(s, x, N, cfg).top());
}

WeightedPartialSums sigma_weighted_partial_sums(const Complex& s, const Real& x, long N,
                                                const EvalConfig& cfg) {
  if (N < 1) throw DomainError("partial sum needs N >= 1");
  if (x.sign() <= 0 || x > Real(1)) throw DomainError("partial sum needs 0 < x <= 1");
  const long Nh = std::max(1L, N / 2);
  WeightProfile pr = make_profile(s, x, N, cfg);
  for (int attempt = 0; attempt < 4; ++attempt) {
    const long top = pr.top();
    if (digits_for_bits(top) > cfg.max_work_digits)
      throw PrecisionError("partial sum to N = " + std::to_string(N) + " needs " +
                           std::to_string(digits_for_bits(top)) + " digits, above max_work_digits = " +
                           std::to_string(cfg.max_work_digits));
    const long wbits = top + N + 64;
    std::vector<Real> F = weights(N, wbits);
    std::vector<Real> H = weights(Nh, wbits);
    WorkingPrecision wp(top);
    Complex full, half;
    Real xp = x.rounded(top);
    PowerSieve sieve(s, N, [&](long m) { return pr.bits(m); });
    sieve.run([&](long m, const Complex& pw) {
      const long k = m - 1;
      const long b = pr.bits(m);
      Complex tf, th;
      {
        WorkingPrecision local(b);
        Real xb = xp.rounded(b);
        tf = pw * (xb * F[static_cast<size_t>(k)].rounded(b));
        if (k < Nh) th = pw * (xb * H[static_cast<size_t>(k)].rounded(b));
      }
      auto accumulate = [&](Complex& acc, const Complex& t) {
        if (k % 2 == 0) {
          mpfr_add(acc.re.raw(), acc.re.raw(), t.re.raw(), MPFR_RNDN);
          mpfr_add(acc.im.raw(), acc.im.raw(), t.im.raw(), MPFR_RNDN);
        } else {
          mpfr_sub(acc.re.raw(), acc.re.raw(), t.re.raw(), MPFR_RNDN);
          mpfr_sub(acc.im.raw(), acc.im.raw(), t.im.raw(), MPFR_RNDN);
        }
      };
      accumulate(full, tf);
      if (k < Nh) accumulate(half, th);
      mpfr_mul(xp.raw(), xp.raw(), x.raw(), MPFR_RNDN);
      return true;
    });
    double lv = abs(full).log10_abs() * kLog2_10;
    if (full.is_zero() || lv >= pr.floor2 - 2) {
      WeightedPartialSums out;
      out.full = full.rounded(cfg.guarded_bits());
      out.half = half.rounded(cfg.guarded_bits());
      out.n_full = N;
      out.n_half = Nh;
      out.work_digits = digits_for_bits(top);
      return out;
    }
    pr.floor2 = lv - 8;
  }
  throw PrecisionError("partial sum could not settle its precision budget");
}

}  // namespace polyzeta
