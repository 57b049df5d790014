#include "polyzeta/report.hpp"

#include <iomanip>
#include <sstream>

namespace polyzeta {

namespace {

constexpr int kResidualDigits = 6;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(const Real& v, int digits) { return v.to_string(digits); }

Json complex_json(const Complex& z, int digits) {
  return Json{{"re", format_number(z.re, digits)}, {"im", format_number(z.im, digits)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json eval_json(const EvalRecord& r) {
  Json j;
  j["target"] = r.target;
  j["s"] = complex_json(r.s, r.digits);
  j["x"] = r.x.empty() ? Json(nullptr) : Json(r.x);
  j["route"] = route_name(r.result.route);
  j["value"] = complex_json(r.result.value, r.digits);
  j["terms"] = r.result.terms_used;
  j["tail_estimate"] = format_number(r.result.tail_estimate, kResidualDigits);
  j["converged"] = r.result.converged;
  j["digits"] = r.digits;
  j["work_digits"] = r.result.work_digits;
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << r.wall_ms;
  j["wall_ms"] = ms.str();
  return j;
}

std::string eval_text(const EvalRecord& r) {
  std::ostringstream o;
  o << r.target << "(s = " << r.s.to_string(r.digits);
  if (!r.x.empty()) o << ", x = " << r.x;
  o << ")\n";
  o << "  value          " << r.result.value.to_string(r.digits) << "\n";
  o << "  route          " << route_name(r.result.route) << "\n";
  o << "  terms          " << r.result.terms_used << "\n";
  o << "  tail_estimate  " << format_number(r.result.tail_estimate, kResidualDigits) << "\n";
  o << "  converged      " << (r.result.converged ? "yes" : "no") << "\n";
  return o.str();
}

Json suite_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"measured", format_number(c.measured, kResidualDigits)},
                          {"bound", format_number(c.bound, kResidualDigits)},
                          {"passed", c.passed},
                          {"detail", c.detail}});
  }
  return Json{{"suite", r.suite}, {"digits", r.digits}, {"passed", r.passed()}, {"checks", checks}};
}

std::string suite_csv(const std::vector<SuiteReport>& reports, bool header) {
  std::ostringstream o;
  if (header) o << "suite,check,measured,bound,passed,detail\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      o << r.suite << ',' << csv_field(c.name) << ',' << format_number(c.measured, kResidualDigits) << ','
        << format_number(c.bound, kResidualDigits) << ',' << (c.passed ? "pass" : "fail") << ','
        << csv_field(c.detail) << '\n';
  return o.str();
}

std::string suite_text(const SuiteReport& r) {
  std::ostringstream o;
  o << "suite " << r.suite << " (digits " << r.digits << "): " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    o << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "  measured "
      << format_number(c.measured, 3) << "  bound " << format_number(c.bound, 3);
    if (!c.detail.empty()) o << "  (" << c.detail << ")";
    o << "\n";
  }
  return o.str();
}

Json probe_json(const ProbeReport& r, int digits) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"x", format_number(e.x, digits)},
                           {"z", complex_json(e.z, digits)},
                           {"numerator", complex_json(e.numerator, digits)},
                           {"ratio", complex_json(e.ratio, digits)},
                           {"abs_error", format_number(e.abs_error, kResidualDigits)},
                           {"rel_error", format_number(e.rel_error, kResidualDigits)},
                           {"route", route_name(e.route)},
                           {"converged", e.converged},
                           {"flag", e.flag}});
  }
  return Json{{"s", complex_json(r.s, digits)},
              {"mode", probe_mode_name(r.mode)},
              {"denominator", r.denominator == ProbeDenominator::theorem ? "theorem" : "corollary"},
              {"corrections", r.corrections},
              {"target", complex_json(r.target, digits)},
              {"decay_exponent_fit", format_number(Real(r.decay_exponent_fit), kResidualDigits)},
              {"entries", entries},
              {"notes", r.notes}};
}

std::string probe_csv(const ProbeReport& r, int digits) {
  std::ostringstream o;
  o << "x,ratio_re,ratio_im,abs_error,rel_error,route,flag\n";
  for (const auto& e : r.entries)
    o << format_number(e.x, digits) << ',' << format_number(e.ratio.re, digits) << ','
      << format_number(e.ratio.im, digits) << ',' << format_number(e.abs_error, kResidualDigits) << ','
      << format_number(e.rel_error, kResidualDigits) << ',' << route_name(e.route) << ',' << csv_field(e.flag)
      << '\n';
  return o.str();
}

std::string probe_text(const ProbeReport& r, int digits) {
  const int shown = std::min(digits, 20);
  std::ostringstream o;
  o << "probe s = " << r.s.to_string(shown) << ", mode " << probe_mode_name(r.mode) << ", denominator "
    << (r.denominator == ProbeDenominator::theorem ? "(1-x)(-log x)^(s-1)" : "(1-x)^s") << "\n";
  o << "target 2(s-1)Gamma(1-s) = " << r.target.to_string(shown) << "\n";
  o << std::left << std::setw(24) << "x" << std::setw(58) << "ratio" << std::setw(14) << "|error|"
    << "rel" << "\n";
  for (const auto& e : r.entries) {
    o << std::setw(24) << format_number(e.x, 12) << std::setw(58) << e.ratio.to_string(shown) << std::setw(14)
      << format_number(e.abs_error, 3) << format_number(e.rel_error, 3);
    if (!e.flag.empty()) o << "  [" << e.flag << "]";
    o << "\n";
  }
  o << "decay exponent fit " << format_number(Real(r.decay_exponent_fit), 4) << "\n";
  for (const auto& n : r.notes) o << "note: " << n << "\n";
  return o.str();
}

}  // namespace polyzeta
