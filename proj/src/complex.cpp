#include "polyzeta/complex.hpp"

#include <algorithm>

#include "polyzeta/errors.hpp"

namespace polyzeta {

namespace {

std::string strip(std::string_view t) {
  std::string s;
  for (char c : t)
    if (c != ' ' && c != '\t') s += c;
  return s;
}

Real parse_part(const std::string& p, bool unit_allowed) {
  if (unit_allowed && (p.empty() || p == "+")) return Real(1);
  if (unit_allowed && p == "-") return Real(-1);
  return Real(std::string_view(p));
}

}  // namespace

Complex Complex::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError(0, "empty complex literal");
  try {
    if (s.back() != 'i' && s.back() != 'I') return Complex(parse_part(s, false), Real());
    s.pop_back();
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) return Complex(Real(), parse_part(s, true));
    return Complex(parse_part(s.substr(0, split), false), parse_part(s.substr(split), true));
  } catch (const ParseError&) {
    throw ParseError(0, "malformed complex literal '" + std::string(text) + "'");
  }
}

long Complex::precision_digits() const { return digits_for_bits(std::min(re.bits(), im.bits())); }

std::string Complex::to_string(int digits) const {
  std::string r = re.to_string(digits);
  std::string i = im.to_string(digits);
  if (i[0] != '-') i = "+" + i;
  return r + i + "i";
}

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  if (a.im.is_zero()) return a.re * b;
  if (b.im.is_zero()) return a * b.re;
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return a / b.re;
  // Smith's scaling keeps intermediate magnitudes tame.
  if (abs(b.re) >= abs(b.im)) {
    Real r = b.im / b.re;
    Real d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  Real r = b.re / b.im;
  Real d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
  if (z.im.is_zero()) {
    if (z.re.sign() < 0) return pi();
    return Real();
  }
  return atan2(z.im, z.re);
}

Complex expi(const Real& theta) {
  Real s, c;
  sin_cos(theta, s, c);
  return {c, s};
}

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return Complex(m);
  return expi(z.im) * m;
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re));
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() >= 0) return Complex(sqrt(z.re));
  Real m = abs(z);
  Real a = sqrt((m + z.re) / 2L);
  Real b = sqrt((m - z.re) / 2L);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

Complex sin(const Complex& z) {
  if (z.im.is_zero()) return Complex(sin(z.re));
  Real s, c;
  sin_cos(z.re, s, c);
  return {s * cosh(z.im), c * sinh(z.im)};
}

Complex cos(const Complex& z) {
  if (z.im.is_zero()) return Complex(cos(z.re));
  Real s, c;
  sin_cos(z.re, s, c);
  return {c * cosh(z.im), -(s * sinh(z.im))};
}

Complex mul_i(const Complex& z) { return {-z.im, z.re}; }

Complex cpow(const Complex& w, const Complex& z) {
  if (w.is_zero()) {
    if (z.re.sign() > 0) return Complex();
    throw DomainError("0^z with re(z) <= 0");
  }
  if (z.is_zero()) return Complex(1);
  if (w.im.is_zero() && w.re.sign() > 0) return rpow(w.re, z);
  return exp(log(w) * z);
}

Complex rpow(const Real& w, const Complex& z) {
  if (w.sign() <= 0) throw DomainError("rpow needs a positive base");
  if (z.im.is_zero()) return Complex(pow(w, z.re));
  Real lw = log(w);
  return expi(z.im * lw) * exp(z.re * lw);
}

}  // namespace polyzeta
