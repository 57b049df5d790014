#pragma once

#include <string>

#include "doctest.h"
#include "polyzeta/config.hpp"

namespace pzt {

using namespace polyzeta;

inline EvalConfig config(int digits = 50, const char* tol = nullptr) {
  EvalConfig c;
  c.digits = digits;
  if (tol) c.target_tol = Real(std::string_view(tol), 64);
  else if (digits < 36) c.target_tol = pow10(6 - digits).rounded(64);
  return c;
}

constexpr long kBits = 480;

inline Real R(const char* text) { return Real(std::string_view(text), kBits); }
inline Complex C(const char* text) {
  WorkingPrecision wp(kBits);
  return Complex::parse(text);
}
inline Complex C(const char* re, const char* im) { return Complex(R(re), R(im)); }

// |a - b| / |b| as a double (|b| = 0 gives |a|)
inline double rel(const Complex& a, const Complex& b) {
  WorkingPrecision wp(kBits);
  Real d = abs(a - b);
  Real m = abs(b);
  return (m.is_zero() ? d : d / m).to_double();
}
inline double absdiff(const Complex& a, const Complex& b) {
  WorkingPrecision wp(kBits);
  return abs(a - b).to_double();
}

}  // namespace pzt
