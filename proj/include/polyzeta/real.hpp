#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

namespace polyzeta {

long bits_for_digits(long digits);
long digits_for_bits(long bits);

// Precision (in bits) given to every freshly computed Real on this thread.
long working_bits();

class WorkingPrecision {
 public:
  explicit WorkingPrecision(long bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  long saved_;
};

// Owning wrapper over mpfr_t. Copies keep the source precision; results of
// arithmetic are rounded to working_bits().
class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(unsigned long v);
  Real(double v);
  explicit Real(std::string_view decimal);
  Real(std::string_view decimal, long bits);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real with_bits(long bits);
  static Real from_raw(mpfr_srcptr v);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  Real rounded(long bits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const;
  // log10|v| as a double, safe for exponents far outside double range.
  double log10_abs() const;
  std::string to_string(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  void swap(Real& o) noexcept { mpfr_swap(v_, o.v_); }

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real expm1(const Real& a);
Real log(const Real& a);
Real log1p(const Real& a);
Real log_ui(unsigned long n);
Real sin(const Real& a);
Real cos(const Real& a);
void sin_cos(const Real& a, Real& s, Real& c);
Real sinh(const Real& a);
Real cosh(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& a, const Real& b);
Real pow_ui(const Real& a, unsigned long n);
Real floor(const Real& a);
Real round(const Real& a);
Real hypot(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real pi();
Real euler_gamma();
Real ldexp(const Real& a, long e);
Real pow10(long e);

}  // namespace polyzeta
