#pragma once

#include <string>
#include <vector>

#include "polyzeta/config.hpp"

namespace polyzeta {

struct CheckResult {
  std::string name;
  Real measured;  // residual, relative unless the name says otherwise
  Real bound;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int digits = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct SuiteOptions {
  bool expensive = false;
  long direct_terms = 10000;  // N for the direct Z series
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const EvalConfig& cfg, const SuiteOptions& opt = {});

}  // namespace polyzeta
