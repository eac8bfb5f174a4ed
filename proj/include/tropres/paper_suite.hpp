#pragma once

#include <string>
#include <vector>

namespace tropres {

struct SuiteCase {
  std::string name;
  bool passed = false;
  std::string detail;  // failure or exception text
};

/// Runs the bundled regression examples (worked examples and tables from the
/// reference material) and reports one entry per check.
std::vector<SuiteCase> run_paper_suite();

}  // namespace tropres
