#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "polyzeta/specfun.hpp"

namespace polyzeta {

bool is_nonpositive_integer(const Complex& s) {
  return s.im.is_zero() && s.re.is_integer() && s.re.sign() <= 0;
}

bool is_positive_integer(const Complex& s) {
  return s.im.is_zero() && s.re.is_integer() && s.re.sign() > 0;
}

namespace {

struct Spouge {
  long a = 0;
  long bits = 0;
  std::vector<Real> c;  // c[0] = sqrt(2 pi), c[k] for k = 1..a-1
};

std::shared_ptr<const Spouge> spouge_table(long digits) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const Spouge>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(digits);
  if (it != cache.end()) return it->second;

  auto t = std::make_shared<Spouge>();
  // relative error ~ (2 pi)^{-(a + 1/2)}
  t->a = static_cast<long>(std::ceil(digits * std::log(10.0) / std::log(2.0 * M_PI))) + 2;
  // the coefficients reach ~e^a / sqrt(a) in size and alternate
  t->bits = bits_for_digits(digits + static_cast<long>(0.45 * t->a) + 10);
  WorkingPrecision wp(t->bits);
  t->c.resize(static_cast<size_t>(t->a));
  t->c[0] = sqrt(pi() * 2L);
  Real fact(1);  // (k-1)!
  for (long k = 1; k < t->a; ++k) {
    if (k > 1) fact = fact * (k - 1);
    Real ak(t->a - k);
    Real v = exp(Real(k - 1) * log(ak) + log(ak) / 2L + ak) / fact;
    t->c[static_cast<size_t>(k)] = (k % 2 == 1) ? v : -v;
  }
  cache.emplace(digits, t);
  return t;
}

// Gamma(z) for re(z) >= 1/2.
Complex spouge_gamma(const Complex& z, long digits) {
  auto t = spouge_table(digits);
  WorkingPrecision wp(t->bits);
  Complex zz = z - Complex(1);
  Complex sum(t->c[0]);
  for (long k = 1; k < t->a; ++k) sum += Complex(t->c[static_cast<size_t>(k)]) / (zz + Complex(k));
  Complex base = zz + Complex(t->a);
  Complex half = zz + Complex(Real(0.5));
  return exp(half * log(base) - base) * sum;
}

}  // namespace

Complex gamma(const Complex& s, const EvalConfig& cfg) {
  if (is_nonpositive_integer(s)) {
    long k = s.re.to_long();
    throw PoleError(k, "gamma has a pole at " + std::to_string(k));
  }
  long digits = cfg.guarded_digits() + 4;
  WorkingPrecision wp(bits_for_digits(digits));
  if (s.re < Real(0.5)) {
    Complex one_minus = Complex(1) - s;
    Complex pis = s * pi();
    Complex r = Complex(pi()) / (sin(pis) * spouge_gamma(one_minus, digits));
    return r.rounded(cfg.guarded_bits());
  }
  return spouge_gamma(s, digits).rounded(cfg.guarded_bits());
}

Complex rgamma(const Complex& s, const EvalConfig& cfg) {
  if (is_nonpositive_integer(s)) return Complex();
  WorkingPrecision wp(cfg.guarded_bits());
  return Complex(1) / gamma(s, cfg);
}

double gamma_oscillation_loss(const Complex& s) {
  if (s.im.is_zero() || s.re.sign() <= 0) return 0.0;
  EvalConfig low;
  low.digits = 20;
  low.target_tol = Real(std::string_view("1e-14"), 64);
  WorkingPrecision wp(low.guarded_bits());
  Real g = abs(gamma(Complex(s.re), low));
  Real h = abs(gamma(Complex(s.re.rounded(low.guarded_bits()), s.im.rounded(low.guarded_bits())), low));
  return std::max(0.0, g.log10_abs() - h.log10_abs()) + 2.0;
}

Real euler_mascheroni(const EvalConfig& cfg) {
  WorkingPrecision wp(cfg.guarded_bits());
  return euler_gamma();
}

}  // namespace polyzeta
