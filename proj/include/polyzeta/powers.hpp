#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polyzeta/complex.hpp"

namespace polyzeta {

// Streams m^{-s}, m = 1..count, using the multiplicativity of m -> m^{-s}:
// only primes cost an exp/log, composites are products of earlier values.
// Each m is delivered at precision bits_of(m).
class PowerSieve {
 public:
  PowerSieve(const Complex& s, long count, std::function<long(long)> bits_of);

  // visit returns false to stop early
  void run(const std::function<bool(long m, const Complex& value)>& visit) const;

  long count() const { return count_; }
  bool stores_cofactors() const { return cofactors_; }

 private:
  Complex s_;
  long count_;
  std::vector<int32_t> spf_;
  std::vector<long> need_;
  std::vector<long> keep_;  // precision to store m at (0: not stored)
  bool cofactors_ = true;
};

// Smallest-prime-factor table for 0..n.
std::vector<int32_t> smallest_prime_factors(long n);

}  // namespace polyzeta
