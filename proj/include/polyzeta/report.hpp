#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polyzeta/suites.hpp"
#include "polyzeta/zerocheck.hpp"

namespace polyzeta {

using Json = nlohmann::json;  // keys sorted, so dumps are canonical

std::string format_number(const Real& v, int digits);
Json complex_json(const Complex& z, int digits);

struct EvalRecord {
  std::string target;
  Complex s;
  std::string x;  // empty when the target takes no x
  SeriesResult result;
  int digits = 0;
  double wall_ms = 0;
};

Json eval_json(const EvalRecord& r);
std::string eval_text(const EvalRecord& r);

Json suite_json(const SuiteReport& r);
std::string suite_csv(const std::vector<SuiteReport>& reports, bool header = true);
std::string suite_text(const SuiteReport& r);

Json probe_json(const ProbeReport& r, int digits);
std::string probe_csv(const ProbeReport& r, int digits);
std::string probe_text(const ProbeReport& r, int digits);

// Canonical text of a JSON document: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace polyzeta
