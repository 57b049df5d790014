#include <cmath>

#include "polyzeta/polylog.hpp"
#include "polyzeta/specfun.hpp"
#include "polyzeta/tail.hpp"
#include "polyzeta/zfunction.hpp"
#include "support.hpp"

using namespace pzt;

namespace {

struct Ref {
  const char* s;
  const char* x;
  const char* re;
  const char* im;
};

// oracle: independent 45-digit evaluation
const Ref kRefs[] = {
    {"0.5", "0.5", "0.530781778686165166257985152635944732517243893", "0"},
    {"2.5", "0.5", "1.26559993736706757426331820988120547410803409", "0"},
    {"0.5+3i", "0.9", "0.025641636582711200288197911918409189416878419", "1.53007741441414720181277295727255262850529938"},
    {"-1.5", "0.5", "0.0788202475422730286344853521465333217483018288", "0"},
    {"-1.5+2i", "0.3", "-0.0385735521675613506291803957114729485424605847",
     "0.230651626388578073035431821542332442150544065"},
    {"0", "0.3", "0.308554778158736322013926255772554185481802611", "0"},
    {"-2", "0.7", "0.0117106972855967746486481305280231266595465948", "0"},
};

const Ref kIntegerRefs[] = {
    {"2", "0.5", "1.06269354038321393056975884648634508047475143", "0"},
    {"2", "0.9", "1.54231627574883530535857779758879297551325996", "0"},
    {"3", "0.5", "1.47800476654304204075910958938024105387105668", "0"},
    {"3", "0.9", "2.23625651379675106701470936031640239351478409", "0"},
};

}  // namespace

TEST_CASE("expansion against frozen oracle values") {
  EvalConfig cfg = config(45, "1e-44");
  for (const Ref& r : kRefs) {
    CAPTURE(r.s);
    CAPTURE(r.x);
    auto [res, terms] = z_expansion({C(r.s), R(r.x), cfg});
    CHECK(res.converged);
    CHECK(rel(res.value, C(r.re, r.im)) < 1e-42);
    CHECK(terms.n_used == res.terms_used);
  }
}

TEST_CASE("integer case against frozen oracle values") {
  EvalConfig cfg = config(45, "1e-44");
  for (const Ref& r : kIntegerRefs) {
    CAPTURE(r.s);
    CAPTURE(r.x);
    SeriesResult res = z_integer(R(r.s).to_long(), R(r.x), cfg);
    CHECK(res.converged);
    CHECK(res.route == Route::integer_case);
    CHECK(rel(res.value, C(r.re, r.im)) < 1e-42);
  }
  CHECK_THROWS_AS(z_integer(1, R("0.5"), cfg), DomainError);
}

TEST_CASE("Li route against frozen oracle values") {
  EvalConfig cfg = config(40, "1e-40");
  for (const Ref& r : kRefs) {
    if (C(r.s).re.sign() <= 0) continue;
    CAPTURE(r.s);
    SeriesResult res = z_via_li({C(r.s), R(r.x), cfg});
    CHECK(rel(res.value, C(r.re, r.im)) < 1e-37);
  }
}

TEST_CASE("Z(1,x) closed form") {
  EvalConfig cfg = config(40);
  WorkingPrecision wp(kBits);
  Real x = R("0.5");
  CHECK(rel(z_at_one(x, cfg), Complex(log_ui(2))) < 1e-40);
  SeriesResult r = evaluate({Complex(1), R("0.3"), cfg});
  CHECK(r.route == Route::closed_form);
  // the direct series converges to the same value
  EvalConfig d = config(20);
  d.max_terms = 4000;
  SeriesResult direct = z_direct({Complex(1), R("0.3"), d});
  CHECK(absdiff(direct.value, r.value) <= direct.tail_estimate.to_double());
}

TEST_CASE("gamma term cancels identically") {
  EvalConfig cfg = config(45, "1e-44");
  for (const char* s : {"0.5", "0.5+3i", "-1.5+2i", "2.5"}) {
    auto [res, terms] = z_expansion({C(s), R("0.6"), cfg});
    CHECK(abs(terms.gamma_term).to_double() < 1e-44 * std::max(1.0, abs(terms.leading).to_double()));
    // leading term is (s-1) zeta(s)
    Complex z = C(s);
    WorkingPrecision wp(kBits);
    CHECK(rel(terms.leading, (z - Complex(1)) * zeta(z, cfg)) < 1e-44);
    CHECK(mpfr_equal_p(terms.sum().re.raw(), res.value.re.raw()));
    CHECK(mpfr_equal_p(terms.sum().im.raw(), res.value.im.raw()));
  }
}

TEST_CASE("expansion domain") {
  EvalConfig cfg = config(30);
  CHECK_THROWS_AS(z_expansion({C("0.5"), R("0.001"), cfg}), DomainError);
  CHECK_THROWS_AS(z_expansion({C("2"), R("0.5"), cfg}), DomainError);
  CHECK_THROWS_AS(z_expansion({C("0.5"), R("1"), cfg}), DomainError);
  CHECK_NOTHROW(z_expansion({C("0.5"), R("0.002"), cfg}));
}

TEST_CASE("expansion near an integer keeps its accuracy") {
  EvalConfig cfg = config(30);
  SeriesResult near = z_expansion({C("2.000001"), R("0.5"), cfg}).first;
  SeriesResult li = z_via_li({C("2.000001"), R("0.5"), cfg});
  CHECK(rel(near.value, li.value) < 1e-23);
  SeriesResult at = z_integer(2, R("0.5"), cfg);
  CHECK(absdiff(near.value, at.value) < 1e-5);
}

TEST_CASE("property: the direct series lies within its tail estimate") {
  EvalConfig ref = config(40, "1e-40");
  EvalConfig cfg = config(20);
  cfg.max_terms = 2000;
  for (const char* s : {"2.5", "0.5+3i", "-1.5+2i", "0"})
    for (const char* x : {"0.3", "0.9"}) {
      CAPTURE(s);
      CAPTURE(x);
      SeriesResult d = z_direct({C(s), R(x), cfg});
      CHECK(d.terms_used == 2000);
      Complex expect = z_expansion({C(s), R(x), ref}).first.value;
      CHECK(absdiff(d.value, expect) <= d.tail_estimate.to_double());
    }
}

TEST_CASE("direct series budget errors") {
  EvalConfig cfg = config(30);
  cfg.max_work_digits = 40;
  CHECK_THROWS_AS(z_direct({C("2.5"), R("0.9"), cfg}), PrecisionError);
  EvalConfig ok = config(30);
  ok.max_terms = 500;
  CHECK(z_direct_feasible_terms(C("2.5"), R("0.9"), ok) == 500);
}

TEST_CASE("tail model") {
  EvalConfig cfg = config(30);
  // zero where 1/Gamma(s) vanishes
  CHECK(z_tail_model(Complex(0), 1000, cfg).is_zero());
  CHECK(z_tail_model(Complex(-2), 1000, cfg).is_zero());
  // at s = 1 the model sum is sum_{n>N} 1/(n(n+1)) = 1/(N+1)
  WorkingPrecision wp(kBits);
  CHECK(rel(z_tail_model(Complex(1), 1000, cfg), Complex(Real(1) / 1001L)) < 1e-20);
  double a = abs(z_tail_model(C("2.5"), 100, cfg)).to_double();
  double b = abs(z_tail_model(C("2.5"), 10000, cfg)).to_double();
  CHECK(b < a);
  CHECK(z_tail_correction_bound(C("2.5"), R("0.5"), 10000, cfg) < z_tail_correction_bound(C("2.5"), R("0.5"), 100, cfg));
}

TEST_CASE("bilateral series for re(s) < 0") {
  EvalConfig cfg = config(30);
  for (const Ref& r : kRefs) {
    Complex s = C(r.s);
    if (s.re.sign() >= 0 || s.re > Real(-1)) continue;
    CAPTURE(r.s);
    SeriesResult b = z_bilateral({s, R(r.x), cfg}, 2000);
    CHECK(absdiff(b.value, C(r.re, r.im)) <= b.tail_estimate.to_double());
    CHECK(b.terms_used == 4001);
  }
  CHECK_THROWS_AS(z_bilateral({C("0.5"), R("0.5"), cfg}, 10), DomainError);
  CHECK_THROWS_AS(z_bilateral({C("-1.5"), R("0.5"), cfg}, 0), DomainError);
}

TEST_CASE("gamma_term_model") {
  EvalConfig cfg = config(30);
  WorkingPrecision wp(kBits);
  Real x = R("0.9");
  CHECK(rel(gamma_term_model(Complex(1), x, cfg), Complex(-(Real(1) - x * x))) < 1e-30);
  Complex s = C("0.5+3i");
  Complex m = gamma_term_model(s, x, cfg);
  Complex expect = (s - Complex(1)) * gamma(Complex(1) - s, cfg) * rpow(-log(x), s - Complex(1)) * (Real(1) - x * x);
  CHECK(rel(m, expect) < 1e-30);
  // k = 2: (1-x^2) log x [1 - log(-log x)]
  Real L = log(x);
  CHECK(rel(gamma_term_model(Complex(2), x, cfg), Complex((Real(1) - x * x) * L * (Real(1) - log(-L)))) < 1e-30);
}

TEST_CASE("evaluate picks a route") {
  EvalConfig cfg = config(30);
  CHECK(evaluate({C("2"), R("0.5"), cfg}).route == Route::integer_case);
  CHECK(evaluate({C("2.000000001"), R("0.5"), cfg}).route == Route::integer_case);
  CHECK(evaluate({C("0.5+3i"), R("0.5"), cfg}).route == Route::li_integral);
  CHECK(evaluate({C("-1.5"), R("0.5"), cfg}).route == Route::expansion);
  CHECK(evaluate({C("2.5"), R("0.5"), cfg}, Route::expansion).route == Route::expansion);
  CHECK_THROWS_AS(evaluate({C("2.5"), R("0.5"), cfg}, Route::integer_case), DomainError);
  CHECK_THROWS_AS(evaluate({C("2.5"), R("0.5"), cfg}, Route::closed_form), DomainError);
  CHECK_THROWS_AS(evaluate({C("2.5"), R("1.5"), cfg}), DomainError);
}

TEST_CASE("property: routes agree on a grid") {
  EvalConfig cfg = config(30);
  for (const char* s : {"0.5+3i", "1.5", "3.5-2i", "0.25"})
    for (const char* x : {"0.05", "0.5", "0.95"}) {
      CAPTURE(s);
      CAPTURE(x);
      Complex a = z_via_li({C(s), R(x), cfg}).value;
      Complex b = z_expansion({C(s), R(x), cfg}).first.value;
      CHECK(rel(a, b) < 1e-22);
    }
}

TEST_CASE("property: Z(s,x) tends to (s-1) zeta(s) as x -> 1") {
  EvalConfig cfg = config(30);
  Complex s = C("2.5");
  WorkingPrecision wp(kBits);
  Complex limit = (s - Complex(1)) * zeta(s, cfg);
  double prev = 1e300;
  for (const char* x : {"0.9", "0.99", "0.999", "0.9999"}) {
    double d = absdiff(z_expansion({s, R(x), cfg}).first.value, limit);
    CHECK(d < prev);
    prev = d;
  }
}
