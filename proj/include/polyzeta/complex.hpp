#pragma once

#include <string>
#include <string_view>

#include "polyzeta/real.hpp"

namespace polyzeta {

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(const Real& r) : re(r), im() {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(int r) : re(r), im() {}
  Complex(long r) : re(r), im() {}
  Complex(double r) : re(r), im() {}

  // "a", "bi", "a+bi", "a-bi"; decimal with optional exponent.
  static Complex parse(std::string_view text);

  long precision_digits() const;
  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  Complex rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  std::string to_string(int digits) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }
};

using ComplexScalar = Complex;

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, long b);

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // in (-pi, pi]
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex mul_i(const Complex& z);
Complex expi(const Real& theta);  // e^{i theta}

// exp(z Log w) with the principal logarithm; w = 0 is admitted for re(z) > 0.
Complex cpow(const Complex& w, const Complex& z);
// (positive real)^z without going through the complex logarithm.
Complex rpow(const Real& w, const Complex& z);

}  // namespace polyzeta
