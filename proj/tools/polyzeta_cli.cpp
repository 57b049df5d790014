#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polyzeta/polylog.hpp"
#include "polyzeta/report.hpp"
#include "polyzeta/sigma.hpp"
#include "polyzeta/specfun.hpp"
#include "polyzeta/suites.hpp"
#include "polyzeta/zerocheck.hpp"
#include "polyzeta/zfunction.hpp"

using namespace polyzeta;

namespace {

struct Common {
  int digits = 50;
  std::string tol;
  bool json = false;
  bool csv = false;
  bool expensive = false;
};

EvalConfig make_config(const Common& c) {
  EvalConfig cfg;
  cfg.digits = c.digits;
  if (!c.tol.empty()) {
    cfg.target_tol = Real(std::string_view(c.tol), 64);
  } else if (c.digits < 36) {
    cfg.target_tol = pow10(6 - c.digits).rounded(64);
  }
  cfg.validate();
  return cfg;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Real parse_x(const std::string& text, const EvalConfig& cfg) {
  Real x(std::string_view(text), cfg.guarded_bits() + 64);
  return x;
}

Complex parse_s(const std::string& text, const EvalConfig& cfg) {
  WorkingPrecision wp(cfg.guarded_bits() + 64);
  return Complex::parse(text);
}

std::vector<Real> parse_x_seq(const std::string& text, const EvalConfig& cfg) {
  std::vector<Real> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    xs.push_back(parse_x(item, cfg));
  }
  if (xs.empty()) throw UsageError("--x-seq is empty");
  return xs;
}

void emit(const Common& c, const std::string& text, const Json& j, const std::string& csv) {
  if (c.json) std::cout << dump(j);
  else if (c.csv) std::cout << csv;
  else std::cout << text;
}

int cmd_eval(const Common& c, const std::string& target, const std::string& s_text, const std::string& x_text,
             const std::string& route, long n) {
  EvalConfig cfg = make_config(c);
  WorkingPrecision wp(cfg.guarded_bits());
  Complex s = parse_s(s_text, cfg);
  EvalRecord rec;
  rec.target = target;
  rec.s = s;
  rec.digits = cfg.digits;
  auto need_x = [&]() {
    if (x_text.empty()) throw UsageError("--x is required for target " + target);
    rec.x = x_text;
    return parse_x(x_text, cfg);
  };
  auto t0 = std::chrono::steady_clock::now();
  if (target == "z") {
    Real x = need_x();
    std::optional<Route> r;
    if (!route.empty()) r = route_from_name(route);
    rec.result = evaluate({s, x, cfg}, r);
  } else if (target == "li") {
    Real x = need_x();
    if (route.empty() || route == "direct" || route == "series") rec.result = li_series({s, x, cfg});
    else if (route == "li_integral" || route == "integral") rec.result = li_integral({s, x, cfg});
    else throw UsageError("li routes: direct, li_integral");
  } else if (target == "sigma") {
    Real x = need_x();
    if (n < 1) throw UsageError("--n >= 1 is required for target sigma");
    SigmaParams p{n, s, x};
    if (route.empty() || route == "direct") {
      rec.result.value = sigma_direct(p, cfg);
      rec.result.route = Route::direct;
      rec.result.work_digits = sigma_budget_digits(n, s, x, cfg);
    } else if (route == "stirling") {
      rec.result.value = sigma_stirling(p, cfg);
      rec.result.route = Route::closed_form;
    } else if (route == "integral" || route == "li_integral") {
      rec.result = sigma_integral(p, cfg);
    } else {
      throw UsageError("sigma routes: direct, stirling, integral");
    }
    rec.result.terms_used = rec.result.terms_used ? rec.result.terms_used : n;
    if (route != "integral" && route != "li_integral") {
      rec.result.tail_estimate = Real(0);
      rec.result.converged = true;
    }
  } else if (target == "zeta") {
    if (route.empty()) {
      rec.result.value = zeta(s, cfg);
      rec.result.route = Route::closed_form;
      rec.result.converged = true;
      rec.result.tail_estimate = Real(0);
    } else if (route == "direct" || route == "hasse") {
      rec.result = zeta_hasse(s, cfg);
      WorkingPrecision w2(cfg.guarded_bits());
      if (!(s.re == Real(1) && s.im.is_zero())) {
        Complex sm1 = s - Complex(1);
        rec.result.value = rec.result.value / sm1;
        rec.result.tail_estimate = rec.result.tail_estimate / abs(sm1);
      }
    } else {
      throw UsageError("zeta routes: (default), hasse");
    }
  } else {
    throw UsageError("eval target must be one of li, sigma, z, zeta");
  }
  rec.wall_ms = elapsed_ms(t0);
  std::ostringstream csv;
  csv << "target,s_re,s_im,x,route,value_re,value_im,terms,tail_estimate\n"
      << target << ',' << s.re.to_string(cfg.digits) << ',' << s.im.to_string(cfg.digits) << ',' << rec.x << ','
      << route_name(rec.result.route) << ',' << rec.result.value.re.to_string(cfg.digits) << ','
      << rec.result.value.im.to_string(cfg.digits) << ',' << rec.result.terms_used << ','
      << rec.result.tail_estimate.to_string(6) << '\n';
  emit(c, eval_text(rec), eval_json(rec), csv.str());
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite) {
  EvalConfig cfg = make_config(c);
  SuiteOptions opt;
  opt.expensive = c.expensive;
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else names.push_back(suite);
  std::vector<SuiteReport> reports;
  for (const auto& n : names) reports.push_back(run_suite(n, cfg, opt));
  bool ok = true;
  Json all = Json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    all.push_back(suite_json(r));
    text += suite_text(r);
  }
  Json doc = reports.size() == 1 ? suite_json(reports[0]) : Json{{"suites", all}, {"passed", ok}};
  emit(c, text, doc, suite_csv(reports));
  return ok ? 0 : 1;
}

int cmd_probe(const Common& c, const std::string& s_text, const std::string& zeros_file, long zero_index,
              const std::string& mode, const std::string& x_seq, int corrections, bool corollary) {
  EvalConfig cfg = make_config(c);
  WorkingPrecision wp(cfg.guarded_bits());
  Complex s;
  std::vector<std::string> pre_notes;
  if (!zeros_file.empty()) {
    auto zeros = load_zeros(zeros_file);
    if (zero_index < 1 || zero_index > static_cast<long>(zeros.size()))
      throw UsageError("--zero-index " + std::to_string(zero_index) + " out of range 1.." +
                       std::to_string(zeros.size()));
    ZeroCandidate z = refine_zero(zeros[static_cast<size_t>(zero_index - 1)], cfg);
    s = z.s;
    pre_notes.push_back("zero " + std::to_string(zero_index) + " refined to t = " + z.s.im.to_string(cfg.digits) +
                        ", |zeta| = " + z.residual->to_string(3));
  } else if (!s_text.empty()) {
    s = parse_s(s_text, cfg);
  } else {
    throw UsageError("probe needs --s or --zeros-file with --zero-index");
  }
  ProbeOptions opt;
  opt.mode = probe_mode_from_name(mode);
  opt.corrections = corrections;
  opt.denominator = corollary ? ProbeDenominator::corollary : ProbeDenominator::theorem;
  std::vector<Real> xs = x_seq.empty() ? default_x_sequence(c.expensive ? 6 : 4, cfg) : parse_x_seq(x_seq, cfg);
  ProbeReport rep = probe_ratio(s, xs, opt, cfg);
  rep.notes.insert(rep.notes.begin(), pre_notes.begin(), pre_notes.end());
  emit(c, probe_text(rep, cfg.digits), probe_json(rep, cfg.digits), probe_csv(rep, cfg.digits));
  return 0;
}

int cmd_bench(const Common& c) {
  EvalConfig cfg = make_config(c);
  WorkingPrecision wp(cfg.guarded_bits());
  std::cout << "route,s,x,digits,terms,work_digits,wall_ms,value_re,value_im\n";
  const long direct_terms = c.expensive ? 10000 : 2000;
  for (const char* ss : {"0.5", "2.5", "0.5+3i", "-1.5"})
    for (const char* xs : {"0.3", "0.9"}) {
      Complex s = parse_s(ss, cfg);
      Real x = parse_x(xs, cfg);
      for (Route r : {Route::li_integral, Route::expansion, Route::direct}) {
        if (r == Route::li_integral && s.re.sign() <= 0) continue;
        EvalConfig rc = cfg;
        if (r == Route::direct) rc.max_terms = direct_terms;
        auto t0 = std::chrono::steady_clock::now();
        SeriesResult res = evaluate({s, x, rc}, r);
        double ms = elapsed_ms(t0);
        std::ostringstream wall;
        wall << std::fixed << std::setprecision(3) << ms;
        std::cout << route_name(r) << ',' << ss << ',' << xs << ',' << cfg.digits << ',' << res.terms_used << ','
                  << res.work_digits << ',' << wall.str() << ',' << res.value.re.to_string(cfg.digits) << ','
                  << res.value.im.to_string(cfg.digits) << '\n';
      }
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyzeta: polylogarithm, binomial sums and the entire function Z(s,x)"};
  app.require_subcommand(1);
  Common common;
  if (const char* env = std::getenv("POLYZETA_DIGITS")) {
    try {
      common.digits = std::stoi(env);
    } catch (...) {
      std::cerr << "error: usage_error: POLYZETA_DIGITS is not an integer\n";
      return 2;
    }
  }
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", common.digits, "significant digits");
    sub->add_option("--tol", common.tol, "relative target tolerance, e.g. 1e-30");
    auto* j = sub->add_flag("--json", common.json, "JSON output");
    auto* c = sub->add_flag("--csv", common.csv, "CSV output");
    j->excludes(c);
    sub->add_flag("--expensive", common.expensive, "enable long-running variants");
  };

  std::string target, s_text, x_text, route;
  long n = 0;
  auto* ev = app.add_subcommand("eval", "evaluate li, sigma, z or zeta at a point");
  ev->add_option("target", target, "li | sigma | z | zeta")->required();
  ev->add_option("--s", s_text, "complex s, e.g. 0.5+14.1347i")->required();
  ev->add_option("--x", x_text, "real x in (0,1)");
  ev->add_option("--route", route, "route override");
  ev->add_option("--n", n, "n for sigma");
  add_common(ev);

  std::string suite;
  auto* ve = app.add_subcommand("verify", "run an identity verification suite");
  ve->add_option("--suite", suite, "sigma-routes | prop21 | z-routes | limit-law | asymptotics | bilateral | all")
      ->required();
  add_common(ve);

  std::string zeros_file, mode = "zeta-subtracted", x_seq, s_probe;
  long zero_index = 0;
  int corrections = 4;
  bool corollary = false;
  auto* pr = app.add_subcommand("probe", "ratio probe of Z(s,x) as x -> 1");
  pr->add_option("--s", s_probe, "complex s with 0 < re(s) < 1");
  pr->add_option("--zeros-file", zeros_file, "file of zero ordinates t");
  pr->add_option("--zero-index", zero_index, "1-based index into the zeros file");
  pr->add_option("--mode", mode, "raw | zeta-subtracted | corrected");
  pr->add_option("--x-seq", x_seq, "comma separated x values");
  pr->add_option("--corrections", corrections, "shift terms removed in corrected mode");
  pr->add_flag("--corollary", corollary, "use the (1-x)^s denominator");
  add_common(pr);

  auto* be = app.add_subcommand("bench", "route timing grid (CSV)");
  add_common(be);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ev->parsed()) return cmd_eval(common, target, s_text, x_text, route, n);
    if (ve->parsed()) return cmd_verify(common, suite);
    if (pr->parsed()) return cmd_probe(common, s_probe, zeros_file, zero_index, mode, x_seq, corrections, corollary);
    if (be->parsed()) return cmd_bench(common);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: internal_error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
