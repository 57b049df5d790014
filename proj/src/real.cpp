#include "polyzeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {
thread_local long g_bits = 192;

const std::regex& decimal_pattern() {
  static const std::regex re(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  return re;
}
}  // namespace

long bits_for_digits(long digits) {
  return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.321928094887362)) + 8;
}

long digits_for_bits(long bits) {
  return static_cast<long>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
}

long working_bits() { return g_bits; }

WorkingPrecision::WorkingPrecision(long bits) : saved_(g_bits) {
  g_bits = std::max<long>(bits, MPFR_PREC_MIN + 1);
}
WorkingPrecision::~WorkingPrecision() { g_bits = saved_; }

Real::Real() {
  mpfr_init2(v_, g_bits);
  mpfr_set_zero(v_, 1);
}
Real::Real(int v) : Real(static_cast<long>(v)) {}
Real::Real(long v) {
  mpfr_init2(v_, std::max<long>(g_bits, 64));
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(unsigned long v) {
  mpfr_init2(v_, std::max<long>(g_bits, 64));
  mpfr_set_ui(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
  mpfr_init2(v_, std::max<long>(g_bits, 53));
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(std::string_view decimal) : Real(decimal, g_bits) {}
Real::Real(std::string_view decimal, long bits) {
  mpfr_init2(v_, bits);
  std::string s(decimal);
  if (!std::regex_match(s, decimal_pattern())) {
    mpfr_clear(v_);
    throw ParseError(0, "malformed decimal '" + s + "'");
  }
  mpfr_strtofr(v_, s.c_str(), nullptr, 10, MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::with_bits(long bits) {
  WorkingPrecision wp(bits);
  return Real();
}

Real Real::from_raw(mpfr_srcptr v) {
  Real r = with_bits(static_cast<long>(mpfr_get_prec(v)));
  mpfr_set(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::rounded(long bits) const {
  Real r = with_bits(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

double Real::log10_abs() const {
  if (mpfr_zero_p(v_)) return -INFINITY;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

std::string Real::to_string(int digits) const {
  if (mpfr_zero_p(v_)) return "0";
  if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(digits, 2)), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string out;
  if (m[0] == '-') {
    out += '-';
    m.erase(0, 1);
  }
  out += m[0];
  out += '.';
  out += m.substr(1);
  long ex = static_cast<long>(e) - 1;
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", ex < 0 ? '-' : '+', ex < 0 ? -ex : ex);
  out += buf;
  return out;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.raw(), v_, MPFR_RNDN);
  return r;
}

#define PZ_BINARY(op, fn)                              \
  Real operator op(const Real& a, const Real& b) {     \
    Real r;                                            \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);          \
    return r;                                          \
  }
PZ_BINARY(+, mpfr_add)
PZ_BINARY(-, mpfr_sub)
PZ_BINARY(*, mpfr_mul)
PZ_BINARY(/, mpfr_div)
#undef PZ_BINARY

Real operator*(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

#define PZ_UNARY(name, fn)             \
  Real name(const Real& a) {           \
    Real r;                            \
    fn(r.raw(), a.raw(), MPFR_RNDN);   \
    return r;                          \
  }
PZ_UNARY(abs, mpfr_abs)
PZ_UNARY(sqrt, mpfr_sqrt)
PZ_UNARY(exp, mpfr_exp)
PZ_UNARY(expm1, mpfr_expm1)
PZ_UNARY(log, mpfr_log)
PZ_UNARY(log1p, mpfr_log1p)
PZ_UNARY(sin, mpfr_sin)
PZ_UNARY(cos, mpfr_cos)
PZ_UNARY(sinh, mpfr_sinh)
PZ_UNARY(cosh, mpfr_cosh)
#undef PZ_UNARY

Real log_ui(unsigned long n) {
  Real r;
  mpfr_log_ui(r.raw(), n, MPFR_RNDN);
  return r;
}

void sin_cos(const Real& a, Real& s, Real& c) {
  Real ss, cc;
  mpfr_sin_cos(ss.raw(), cc.raw(), a.raw(), MPFR_RNDN);
  s.swap(ss);
  c.swap(cc);
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& a, const Real& b) {
  Real r;
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real pow_ui(const Real& a, unsigned long n) {
  Real r;
  mpfr_pow_ui(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

Real floor(const Real& a) {
  Real r = Real::with_bits(std::max(a.bits(), working_bits()));
  mpfr_floor(r.raw(), a.raw());
  return r;
}

Real round(const Real& a) {
  Real r = Real::with_bits(std::max(a.bits(), working_bits()));
  mpfr_round(r.raw(), a.raw());
  return r;
}

Real hypot(const Real& a, const Real& b) {
  Real r;
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real pi() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

Real ldexp(const Real& a, long e) {
  Real r;
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real r;
  if (e >= 0) {
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e), MPFR_RNDN);
  } else {
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(-e), MPFR_RNDN);
    mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  }
  return r;
}

}  // namespace polyzeta
