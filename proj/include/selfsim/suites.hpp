#pragma once

// Built-in verification suites.  Each reproduces one worked example or
// property family at a fixed truncation and returns named pass/fail checks.

#include <string>
#include <vector>

#include <json.hpp>

namespace selfsim::suites {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::string title;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteInfo {
  std::string name;
  std::string title;
};

const std::vector<SuiteInfo>& suite_list();
/// Throws UndefinedName for an unknown suite.
SuiteResult run_suite(const std::string& name);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace selfsim::suites
