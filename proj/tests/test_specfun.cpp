#include <cmath>

#include "polyzeta/quadrature.hpp"
#include "polyzeta/specfun.hpp"
#include "support.hpp"

using namespace pzt;

TEST_CASE("gamma classical values") {
  EvalConfig cfg = config(50);
  WorkingPrecision wp(cfg.guarded_bits());
  CHECK(rel(gamma(C("0.5"), cfg), Complex(sqrt(pi()))) < 1e-48);
  CHECK(rel(gamma(Complex(5), cfg), Complex(24)) < 1e-48);
  CHECK(rel(gamma(Complex(1), cfg), Complex(1)) < 1e-48);
}

TEST_CASE("gamma off the axis") {
  EvalConfig cfg = config(50);
  // oracle: independent 45-digit evaluation
  Complex ref = C("-1.44555384376068865900351491837154643875707011e-10", "5.52278876877406335335663417844167335398053118e-10");
  CHECK(rel(gamma(C("0.5-14.134725i"), cfg), ref) < 1e-43);
}

TEST_CASE("gamma poles carry the integer") {
  EvalConfig cfg = config(30);
  for (long k : {0L, -1L, -7L}) {
    try {
      gamma(Complex(k), cfg);
      FAIL("expected a pole");
    } catch (const PoleError& e) {
      CHECK(e.pole == k);
    }
  }
  CHECK(rgamma(Complex(-3), cfg).re.is_zero());
}

TEST_CASE("property: reflection formula on a grid avoiding integers") {
  EvalConfig cfg = config(50);
  WorkingPrecision wp(cfg.guarded_bits());
  for (const char* s : {"0.25", "0.5+3i", "-2.5+1i", "3.7-2i", "0.1+14i", "-4.5"}) {
    Complex z = C(s);
    Complex v = gamma(z, cfg) * gamma(Complex(1) - z, cfg) * sin(z * pi()) / pi();
    CHECK(rel(v, Complex(1)) < 1e-46);
  }
}

TEST_CASE("zeta classical values") {
  EvalConfig cfg = config(50);
  WorkingPrecision wp(cfg.guarded_bits());
  CHECK(rel(zeta(Complex(2), cfg), Complex(pi() * pi() / 6L)) < 1e-48);
  CHECK(rel(zeta(Complex(0), cfg), Complex(Real(-0.5))) < 1e-48);
  CHECK(rel(zeta(Complex(-1), cfg), Complex(Real(-1) / 12L)) < 1e-48);
  CHECK(zeta(Complex(-2), cfg).re.is_zero());
  CHECK(rel(zeta(Complex(4), cfg), Complex(pow_ui(pi(), 4) / 90L)) < 1e-48);
  CHECK_THROWS_AS(zeta(Complex(1), cfg), PoleError);
}

TEST_CASE("zeta on the critical strip") {
  EvalConfig cfg = config(50);
  Complex ref = C("0.532736670974232883923384121681119541477001153", "-0.0788965134258333826562050869059741932427054118");
  CHECK(rel(zeta(C("0.5+3i"), cfg), ref) < 1e-44);
  Complex z1 = zeta(C("0.5+14.1347251417346937904572519835624702707842571i"), cfg);
  CHECK(abs(z1).to_double() < 1e-43);
}

TEST_CASE("property: functional equation on a grid") {
  EvalConfig cfg = config(40);
  WorkingPrecision wp(cfg.guarded_bits());
  for (const char* s : {"-2.5+1i", "-0.5", "0.3+7i", "1.5-2i", "2.5", "3.9+0.5i"}) {
    Complex z = C(s);
    Complex rhs = cpow(Complex(2), z) * cpow(Complex(pi()), z - Complex(1)) * sin(z * pi() / 2L) *
                  gamma(Complex(1) - z, cfg) * zeta(Complex(1) - z, cfg);
    CHECK(rel(zeta(z, cfg), rhs) < 1e-36);
  }
}

TEST_CASE("zeta agrees with the Euler-Maclaurin evaluation") {
  EvalConfig cfg = config(40);
  for (const char* s : {"0.5+3i", "2.5", "-1.5+2i", "1.000001"}) CHECK(rel(zeta(C(s), cfg), zeta_euler_maclaurin(C(s), cfg)) < 1e-36);
}

TEST_CASE("zeta_hasse examples") {
  EvalConfig cfg = config(30);
  cfg.max_terms = 4000;
  WorkingPrecision wp(cfg.guarded_bits());
  SeriesResult two = zeta_hasse(Complex(2), cfg);
  CHECK(absdiff(two.value, zeta(Complex(2), cfg)) <= two.tail_estimate.to_double());
  CHECK(absdiff(two.value, zeta(Complex(2), cfg)) < 1e-3);
  SeriesResult zero = zeta_hasse(Complex(0), cfg);
  CHECK(absdiff(zero.value, Complex(Real(0.5))) < 1e-28);
  Complex s = C("0.5+3i");
  SeriesResult g = zeta_hasse(s, cfg);
  CHECK(absdiff(g.value, (s - Complex(1)) * zeta(s, cfg)) <= g.tail_estimate.to_double());
}

TEST_CASE("upper incomplete gamma") {
  EvalConfig cfg = config(40);
  WorkingPrecision wp(cfg.guarded_bits());
  for (const char* a : {"0.1", "2", "30"}) CHECK(rel(upper_incomplete_gamma(Complex(1), R(a), cfg), Complex(exp(-R(a)))) < 1e-38);
  CHECK(rel(upper_incomplete_gamma(Complex(2), Real(0), cfg), Complex(1)) < 1e-38);
  Complex ref = C("2.43427054549998227782116549481299474240091069e-5", "1.86700711652919378434072618356876873508467935e-5");
  Complex s = C("0.5+3i");
  CHECK(rel(upper_incomplete_gamma(s, R("9.2"), cfg), ref) < 1e-36);
  // the same value by quadrature of the shifted integrand u = 9.2 + t
  const Real a = R("9.2");
  SeriesResult q = integrate_halfline(
      [&](const Real& t, const Real&) { return exp((s - Complex(1)) * Complex(log(a + t))) * exp(-(a + t)); },
      Complex(1), cfg);
  CHECK(rel(q.value, ref) < 1e-30);
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == mpq_class(11, 6));
  for (long k = 1; k <= 100; ++k) CHECK(harmonic(k) - harmonic(k - 1) == mpq_class(1, k));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  for (long n = 0; n <= 64; ++n) {
    mpz_class sum = 0;
    for (long k = 0; k <= n; ++k) sum += binomial(n, k);
    mpz_class p = 1;
    p <<= static_cast<mp_bitcnt_t>(n);
    CHECK(sum == p);
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
}

TEST_CASE("Euler-Mascheroni constant to the printed digits") {
  EvalConfig cfg = config(30);
  CHECK(std::fabs(euler_mascheroni(cfg).to_double() - 0.577215665) < 5e-10);
}

TEST_CASE("zeta cache is transparent") {
  EvalConfig cfg = config(40);
  ZetaCache cache;
  Complex s = C("0.5+3i");
  for (long n = 0; n < 12; ++n) {
    Complex cached = cache.get(s, n, cfg);
    Complex again = cache.get(s, n, cfg);
    CHECK(mpfr_equal_p(cached.re.raw(), again.re.raw()));
    CHECK(rel(cached, zeta(s - Complex(n), cfg)) < 1e-38);
  }
  CHECK(cache.size() == 12);
  cache.clear();
  CHECK(cache.size() == 0);
}
