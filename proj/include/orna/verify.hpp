#pragma once

#include <string>
#include <vector>

namespace orna::verify {

struct SuiteResult {
  std::string name;
  std::string summary;
  bool passed = false;
  std::string detail;  // first failure, empty when passed
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. max_nodes caps the exhaustive enumerations; 0
/// keeps each suite's default bound.
SuiteResult run_suite(const std::string& name, int max_nodes = 0);

std::vector<SuiteResult> run_all_suites(int max_nodes = 0);

}  // namespace orna::verify
