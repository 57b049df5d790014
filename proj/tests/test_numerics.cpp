#include <cmath>

#include "polyzeta/quadrature.hpp"
#include "polyzeta/specfun.hpp"
#include "support.hpp"

using namespace pzt;

TEST_CASE("bits and digits round trip") {
  for (long d : {15L, 50L, 300L, 3100L}) CHECK(digits_for_bits(bits_for_digits(d)) >= d);
}

TEST_CASE("real parsing rejects junk") {
  CHECK_THROWS_AS(Real(std::string_view("1.2.3")), ParseError);
  CHECK_THROWS_AS(Real(std::string_view("abc")), ParseError);
  CHECK(Real(std::string_view("-2.5e-3")).to_double() == doctest::Approx(-0.0025));
}

TEST_CASE("complex literal forms") {
  WorkingPrecision wp(kBits);
  Complex a = Complex::parse("3");
  CHECK(a.re.to_double() == 3.0);
  CHECK(a.im.is_zero());
  Complex b = Complex::parse("2.5i");
  CHECK(b.re.is_zero());
  CHECK(b.im.to_double() == 2.5);
  Complex c = Complex::parse("0.5-14.134725i");
  CHECK(c.re.to_double() == 0.5);
  CHECK(c.im.to_double() == doctest::Approx(-14.134725));
  Complex d = Complex::parse("1e-3+2E2i");
  CHECK(d.re.to_double() == doctest::Approx(1e-3));
  CHECK(d.im.to_double() == 200.0);
  CHECK_THROWS_AS(Complex::parse("1+i+2"), ParseError);
  CHECK_THROWS_AS(Complex::parse(""), ParseError);
}

TEST_CASE("cpow examples") {
  WorkingPrecision wp(kBits);
  CHECK(rel(cpow(Complex(4), C("0.5")), Complex(2)) < 1e-100);
  for (const char* w : {"0.5", "3+4i", "-2", "-1-1i"}) CHECK(rel(cpow(C(w), Complex(0)), Complex(1)) == 0.0);
  // oracle: exp((0.5+3i) ln 0.5), independent evaluation at 45 digits
  Complex ref = C("-0.344357055343599855632118246937405717620854314", "-0.617590656045802644164388435260654516861917806");
  CHECK(rel(cpow(R("0.5"), C("0.5+3i")), ref) < 1e-44);
  CHECK_THROWS_AS(cpow(Complex(0), C("-1")), DomainError);
  CHECK(cpow(Complex(0), C("2")).re.is_zero());
}

TEST_CASE("cpow principal branch on the negative axis") {
  WorkingPrecision wp(kBits);
  // (-1)^{1/2} = i with arg(-1) = pi
  Complex r = cpow(Complex(-1), C("0.5"));
  CHECK(std::fabs(r.re.to_double()) < 1e-100);
  CHECK(r.im.to_double() == doctest::Approx(1.0));
}

TEST_CASE("property: cpow(w,a) cpow(w,b) = cpow(w,a+b) on the positive axis") {
  WorkingPrecision wp(bits_for_digits(56));
  const char* ws[] = {"0.001", "0.5", "1", "7.25", "1000"};
  const char* zs[] = {"0.5+3i", "-1.25", "2-7i", "0.1i"};
  for (const char* w : ws)
    for (const char* a : zs)
      for (const char* b : zs) {
        Complex lhs = cpow(C(w), C(a)) * cpow(C(w), C(b));
        Complex rhs = cpow(C(w), C(a) + C(b));
        CHECK(rel(lhs, rhs) < 1e-46);
      }
}

TEST_CASE("integrate_halfline examples") {
  EvalConfig cfg = config(50);
  WorkingPrecision wp(cfg.guarded_bits());
  SeriesResult a = integrate_halfline([](const Real& t, const Real&) { return Complex(exp(-t)); }, Complex(1), cfg);
  CHECK(a.converged);
  CHECK(rel(a.value, Complex(1)) < 1e-45);
  SeriesResult b = integrate_halfline(
      [](const Real& t, const Real& lt) { return Complex(exp(-t - lt / 2L)); }, C("0.5"), cfg);
  CHECK(b.converged);
  CHECK(rel(b.value, Complex(sqrt(pi()))) < 1e-45);
  // x e^{-t} t / (1 - x e^{-t})^2 at x = 1/2 integrates to sum_k x^k / k = log 2
  const Real x = R("0.5");
  SeriesResult c = integrate_halfline(
      [&](const Real& t, const Real&) {
        Real q = x * exp(-t);
        Real d = Real(1) - q;
        return Complex(q * t / (d * d));
      },
      Complex(2), cfg);
  CHECK(c.converged);
  CHECK(rel(c.value, Complex(log(Real(2)))) < 1e-45);
}

TEST_CASE("integrate_halfline is deterministic") {
  EvalConfig cfg = config(40);
  WorkingPrecision wp(cfg.guarded_bits());
  auto f = [](const Real& t, const Real& lt) {
    Complex e = exp(Complex(Real(-0.5), Real(3)) * lt);
    return e * exp(-t);
  };
  SeriesResult a = integrate_halfline(f, C("0.5+3i"), cfg);
  SeriesResult b = integrate_halfline(f, C("0.5+3i"), cfg);
  CHECK(mpfr_equal_p(a.value.re.raw(), b.value.re.raw()));
  CHECK(mpfr_equal_p(a.value.im.raw(), b.value.im.raw()));
}

TEST_CASE("property: tightening the tolerance moves a converged result by less than its tail") {
  EvalConfig cfg = config(40, "1e-20");
  EvalConfig tight = config(40, "1e-21");
  auto f = [](const Real& t, const Real& lt) { return Complex(exp(-t + lt * Real(1.5))); };
  SeriesResult a = integrate_halfline(f, C("2.5"), cfg);
  SeriesResult b = integrate_halfline(f, C("2.5"), tight);
  REQUIRE(a.converged);
  WorkingPrecision wp(cfg.guarded_bits());
  CHECK(abs(a.value - b.value) <= max(a.tail_estimate, pow10(-cfg.digits)));
}

TEST_CASE("config validation") {
  EvalConfig c;
  CHECK_NOTHROW(c.validate());
  c.target_tol = Real(std::string_view("1e-48"), 64);
  CHECK_THROWS_AS(c.validate(), UsageError);
  EvalConfig d;
  d.max_terms = 8;
  CHECK_THROWS_AS(d.validate(), UsageError);
  EvalConfig e;
  e.expansion_terms = 3;
  CHECK_THROWS_AS(e.validate(), UsageError);
}

TEST_CASE("settle marks convergence against the scaled tolerance") {
  EvalConfig cfg = config(50);
  SeriesResult r;
  r.value = Complex(100);
  r.tail_estimate = Real(std::string_view("5e-29"), 64);
  settle(r, cfg);
  CHECK(r.converged);  // 5e-29 <= 1e-30 * 100
  r.tail_estimate = Real(std::string_view("2e-28"), 64);
  settle(r, cfg);
  CHECK_FALSE(r.converged);
}
