#include <cmath>
#include <sstream>

#include "polyzeta/specfun.hpp"
#include "polyzeta/zerocheck.hpp"
#include "support.hpp"

using namespace pzt;

namespace {
const char* kT1 = "14.1347251417346937904572519835624702707842571";
const char* kT2 = "21.0220396387715549926284795938969027773343405";

std::vector<ZeroCandidate> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_zeros(in);
}
}  // namespace

TEST_CASE("parse zeros") {
  auto z = parse("14.134725\n# comment\n\n  21.02204  # trailing\n1e1\n");
  REQUIRE(z.size() == 3);
  CHECK(z[0].source == ZeroSource::file);
  CHECK(z[0].s.re == Real(0.5));
  CHECK(absdiff(z[1].s, C("0.5+21.02204i")) < 1e-60);
  CHECK(z[2].s.im == Real(10));
  CHECK_FALSE(z[0].residual.has_value());
}

TEST_CASE("parse errors carry the line") {
  for (auto [text, line] : {std::pair<const char*, long>{"14.1\nabc\n", 2}, {"-3\n", 1}, {"1\n2\n\n0\n", 4},
                            {"1 2\n", 1}}) {
    try {
      parse(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.kind() == ErrorKind::parse);
    }
  }
}

TEST_CASE("load zeros from a file") {
  auto z = load_zeros(std::string(POLYZETA_TEST_DATA) + "/zeros.txt");
  REQUIRE(z.size() == 3);
  CHECK(absdiff(z[2].s, C("0.5+25.010858i")) < 1e-60);
  CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), UsageError);
}

TEST_CASE("refine zeros to the working tolerance") {
  EvalConfig cfg = config(30);
  auto seeds = load_zeros(std::string(POLYZETA_TEST_DATA) + "/zeros.txt");
  ZeroCandidate a = refine_zero(seeds[0], cfg);
  CHECK(a.source == ZeroSource::refined);
  REQUIRE(a.residual.has_value());
  CHECK(a.residual->to_double() <= 1e-24);
  CHECK(std::fabs((a.s.im - R(kT1)).to_double()) < 1e-22);
  ZeroCandidate b = refine_zero(seeds[1], cfg);
  CHECK(std::fabs((b.s.im - R(kT2)).to_double()) < 1e-22);
  // an accurate seed is accepted as is
  ZeroCandidate exact{C("0.5", kT1), ZeroSource::user, std::nullopt};
  CHECK(std::fabs((refine_zero(exact, cfg).s.im - R(kT1)).to_double()) < 1e-22);
}

TEST_CASE("refinement rejects seeds away from a zero") {
  EvalConfig cfg = config(30);
  ZeroCandidate seed{C("0.5+2i"), ZeroSource::user, std::nullopt};
  CHECK_THROWS_AS(refine_zero(seed, cfg), RefinementError);
}

TEST_CASE("probe target against frozen oracle values") {
  EvalConfig cfg = config(45);
  CHECK(rel(probe_target(C("0.5+2i"), cfg),
            C("-0.331830217877981909733318530708727070391697048", "0.298926946532838974777223572340918737563897166")) <
        1e-42);
  CHECK(rel(probe_target(C("0.5", kT1), cfg),
            C("-1.54680631656423132012183532866271957903986734e-8", "-4.63877328963795347295030982552118250938054972e-9")) <
        1e-40);
}

TEST_CASE("rate model") {
  EvalConfig cfg = config(30);
  Complex s = C("0.5+2i");
  CHECK(rate_model(s, Real(1), cfg).is_zero());
  WorkingPrecision wp(kBits);
  CHECK(rel(rate_model(s, R("0.99"), cfg), probe_target(s, cfg) * rpow(R("0.01"), s)) < 1e-30);
  CHECK_THROWS_AS(rate_model(s, R("1.5"), cfg), DomainError);
}

TEST_CASE("default x sequence") {
  EvalConfig cfg = config(30);
  auto xs = default_x_sequence(4, cfg);
  REQUIRE(xs.size() == 4);
  WorkingPrecision wp(kBits);
  CHECK(absdiff(Complex(xs[0]), Complex(R("0.9"))) < 1e-35);
  CHECK(absdiff(Complex(xs[3]), Complex(R("0.9999"))) < 1e-35);
}

TEST_CASE("property: decay fit recovers a power law") {
  for (double p : {0.5, 1.0, 2.25}) {
    std::vector<Real> xs, es;
    WorkingPrecision wp(kBits);
    for (int m = 1; m <= 6; ++m) {
      Real y = pow10(-m);
      xs.push_back(Real(1) - y);
      es.push_back(pow(y, Real(p)) * 3L);
    }
    CHECK(fit_decay_exponent(xs, es) == doctest::Approx(p).epsilon(1e-10));
    es[2] = Real(0);  // skipped
    CHECK(fit_decay_exponent(xs, es) == doctest::Approx(p).epsilon(1e-10));
  }
  CHECK(fit_decay_exponent({}, {}) == 0.0);
}

TEST_CASE("probe mode names") {
  for (ProbeMode m : {ProbeMode::raw, ProbeMode::zeta_subtracted, ProbeMode::corrected})
    CHECK(probe_mode_from_name(probe_mode_name(m)) == m);
  CHECK(probe_mode_from_name("zeta_subtracted") == ProbeMode::zeta_subtracted);
  CHECK_THROWS_AS(probe_mode_from_name("fast"), UsageError);
  CHECK(std::string(zero_source_name(ZeroSource::refined)) == "refined");
}

TEST_CASE("probe input validation") {
  EvalConfig cfg = config(20);
  ProbeOptions opt;
  std::vector<Real> xs = {R("0.9"), R("0.99")};
  CHECK_THROWS_AS(probe_ratio(C("1.5"), xs, opt, cfg), DomainError);
  CHECK_THROWS_AS(probe_ratio(C("0.5+2i"), {R("0.99"), R("0.9")}, opt, cfg), DomainError);
  CHECK_THROWS_AS(probe_ratio(C("0.5+2i"), {R("1")}, opt, cfg), DomainError);
  CHECK_THROWS_AS(probe_ratio(C("0.5+2i"), {R("0.001")}, opt, cfg), DomainError);
  opt.corrections = -1;
  CHECK_THROWS_AS(probe_ratio(C("0.5+2i"), xs, opt, cfg), UsageError);
}

TEST_CASE("probe report bookkeeping") {
  EvalConfig cfg = config(20);
  Complex s = C("0.5+2i");
  auto xs = default_x_sequence(3, cfg);
  ProbeOptions opt;
  ProbeReport r = probe_ratio(s, xs, opt, cfg);
  REQUIRE(r.entries.size() == 3);
  CHECK(r.ratios.size() == 3);
  CHECK(r.corrections == 0);
  CHECK(rel(r.target, probe_target(s, cfg)) < 1e-20);
  WorkingPrecision wp(kBits);
  for (const ProbeEntry& e : r.entries) {
    Complex den = rpow(-log(e.x), s - Complex(1)) * (Real(1) - e.x);
    CHECK(rel(e.ratio * den, e.numerator) < 1e-20);
    CHECK(rel(e.numerator, e.z - (s - Complex(1)) * zeta(s, cfg)) < 1e-18);
    CHECK(absdiff(Complex(e.abs_error), Complex(abs(e.ratio - r.target))) < 1e-15 * e.abs_error.to_double());
  }
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes[0].find("feasibility") == 0);

  opt.denominator = ProbeDenominator::corollary;
  ProbeReport c = probe_ratio(s, xs, opt, cfg);
  for (const ProbeEntry& e : c.entries) CHECK(rel(e.ratio * rpow(Real(1) - e.x, s), e.numerator) < 1e-20);
}

TEST_CASE("property: removing every expansion term leaves nothing") {
  EvalConfig cfg = config(30);
  Complex s = C("0.5+2i");
  ProbeOptions opt;
  opt.mode = ProbeMode::corrected;
  opt.corrections = 10000;
  ProbeReport r = probe_ratio(s, default_x_sequence(3, cfg), opt, cfg);
  for (const ProbeEntry& e : r.entries) CHECK(abs(e.numerator).to_double() < 1e-22);
  CHECK(r.corrections == 10000);
}

TEST_CASE("property: re-refining a refined zero is stable") {
  EvalConfig cfg = config(30);
  ZeroCandidate a = refine_zero({C("0.5+14.134725i"), ZeroSource::user, std::nullopt}, cfg);
  ZeroCandidate b = refine_zero(a, cfg);
  CHECK(std::fabs((b.s.im - a.s.im).to_double()) < 1e-26);
}

TEST_CASE("property: at a refined zero raw and zeta-subtracted numerators differ by at most |s-1| residual") {
  EvalConfig cfg = config(30);
  ZeroCandidate z = refine_zero({C("0.5+14.134725i"), ZeroSource::user, std::nullopt}, cfg);
  auto xs = default_x_sequence(2, cfg);
  ProbeReport raw = probe_ratio(z.s, xs, ProbeOptions{ProbeMode::raw}, cfg);
  ProbeReport sub = probe_ratio(z.s, xs, ProbeOptions{ProbeMode::zeta_subtracted}, cfg);
  WorkingPrecision wp(kBits);
  double bound = (abs(z.s - Complex(1)) * *z.residual).to_double() * 1.01 + 1e-28;
  for (size_t i = 0; i < xs.size(); ++i) CHECK(absdiff(raw.entries[i].numerator, sub.entries[i].numerator) <= bound);
}

TEST_CASE("property: probe is deterministic") {
  EvalConfig cfg = config(20);
  auto xs = default_x_sequence(2, cfg);
  ProbeReport a = probe_ratio(C("0.5+2i"), xs, ProbeOptions{}, cfg);
  ProbeReport b = probe_ratio(C("0.5+2i"), xs, ProbeOptions{}, cfg);
  for (size_t i = 0; i < xs.size(); ++i) {
    CHECK(mpfr_equal_p(a.ratios[i].re.raw(), b.ratios[i].re.raw()));
    CHECK(mpfr_equal_p(a.ratios[i].im.raw(), b.ratios[i].im.raw()));
  }
}

// Expected to fail: Z - (s-1)zeta(s) is dominated by -log x zeta(s-1), so the
// ratio does not settle on 2(s-1)Gamma(1-s). Kept visible rather than removed.
TEST_CASE("property: generic s decay exponent near 1 - re(s)" * doctest::may_fail()) {
  EvalConfig cfg = config(30);
  ProbeReport r = probe_ratio(C("0.5+2i"), default_x_sequence(4, cfg), ProbeOptions{}, cfg);
  CHECK(r.decay_exponent_fit >= 0.4);
  CHECK(r.decay_exponent_fit <= 0.6);
  for (size_t i = 2; i < r.abs_errors.size(); ++i) CHECK(r.abs_errors[i] <= r.abs_errors[i - 1]);
}
