#include <mutex>
#include <vector>

#include "polyzeta/specfun.hpp"

namespace polyzeta {

mpq_class harmonic(long k) {
  if (k < 0) throw DomainError("harmonic needs k >= 0");
  mpq_class h = 0;
  for (long j = 1; j <= k; ++j) h += mpq_class(1, static_cast<unsigned long>(j));
  return h;
}

mpz_class binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpq_class bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli needs n >= 0");
  static std::mutex mu;
  static std::vector<mpq_class> B{mpq_class(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  while (static_cast<long>(B.size()) <= n) {
    long m = static_cast<long>(B.size());
    if (m > 1 && m % 2 == 1) {
      B.emplace_back(0);
      continue;
    }
    mpq_class acc = 0;
    for (long k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * B[static_cast<size_t>(k)];
    mpq_class bm = -acc / mpq_class(m + 1);
    bm.canonicalize();
    B.push_back(bm);
  }
  return B[static_cast<size_t>(n)];
}

}  // namespace polyzeta
