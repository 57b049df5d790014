#include "polyzeta/powers.hpp"

#include <algorithm>

namespace polyzeta {

namespace {

constexpr double kCofactorBudgetBytes = 400.0 * 1024 * 1024;

Complex prime_power(const Complex& s, long p, long bits) {
  WorkingPrecision wp(bits);
  Real lp = log_ui(static_cast<unsigned long>(p));
  Real mag = exp(-(s.re * lp));
  if (s.im.is_zero()) return Complex(mag);
  Real sn, cs;
  sin_cos(s.im * lp, sn, cs);
  return {mag * cs, -(mag * sn)};
}

Complex at_bits(const Complex& v, long bits) {
  if (v.re.bits() <= bits + bits / 4) return v;
  return v.rounded(bits);
}

}  // namespace

std::vector<int32_t> smallest_prime_factors(long n) {
  std::vector<int32_t> spf(static_cast<size_t>(std::max(n, 1L) + 1), 0);
  std::vector<int32_t> primes;
  for (long i = 2; i <= n; ++i) {
    if (spf[static_cast<size_t>(i)] == 0) {
      spf[static_cast<size_t>(i)] = static_cast<int32_t>(i);
      primes.push_back(static_cast<int32_t>(i));
    }
    for (int32_t p : primes) {
      long ip = i * p;
      if (p > spf[static_cast<size_t>(i)] || ip > n) break;
      spf[static_cast<size_t>(ip)] = p;
    }
  }
  return spf;
}

PowerSieve::PowerSieve(const Complex& s, long count, std::function<long(long)> bits_of)
    : s_(s), count_(count) {
  spf_ = smallest_prime_factors(count);
  need_.assign(static_cast<size_t>(count + 1), 0);
  for (long m = 1; m <= count; ++m) need_[static_cast<size_t>(m)] = bits_of(m);
  keep_.assign(static_cast<size_t>(count + 1), 0);
  const long half = count / 2;
  double bytes = 0;
  for (long m = 2; m <= half; ++m) {
    long q = 0;
    for (long j = m; j <= count; j += m) q = std::max(q, need_[static_cast<size_t>(j)]);
    keep_[static_cast<size_t>(m)] = q;
    bytes += 2.0 * (static_cast<double>(q) / 8.0 + 48.0);
  }
  cofactors_ = bytes <= kCofactorBudgetBytes;
}

void PowerSieve::run(const std::function<bool(long, const Complex&)>& visit) const {
  const long half = count_ / 2;
  std::vector<Complex> store(static_cast<size_t>(half + 1));
  for (long m = 1; m <= count_; ++m) {
    const long need = need_[static_cast<size_t>(m)];
    const long keep = m <= half ? keep_[static_cast<size_t>(m)] : 0;
    const long p = m >= 2 ? spf_[static_cast<size_t>(m)] : 1;
    if (m == 1) {
      WorkingPrecision wp(need);
      if (!visit(1, Complex(1))) return;
      continue;
    }
    Complex v;
    if (p == m) {
      v = prime_power(s_, m, std::max(need, keep));
    } else if (cofactors_) {
      const long work = std::max(need, keep);
      WorkingPrecision wp(work);
      v = at_bits(store[static_cast<size_t>(p)], work) * at_bits(store[static_cast<size_t>(m / p)], work);
    } else {
      WorkingPrecision wp(need);
      long rest = m / p;
      v = at_bits(store[static_cast<size_t>(p)], need);
      while (rest > 1) {
        long q = spf_[static_cast<size_t>(rest)];
        v = v * at_bits(store[static_cast<size_t>(q)], need);
        rest /= q;
      }
    }
    if (keep > 0 && (cofactors_ || p == m)) store[static_cast<size_t>(m)] = v;
    if (v.re.bits() > need + need / 4) v = v.rounded(need);
    if (!visit(m, v)) return;
  }
}

}  // namespace polyzeta
