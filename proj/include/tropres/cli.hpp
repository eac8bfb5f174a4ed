#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropres {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFails = 1,
  kExitUsage = 2,
  kExitAssumptionViolated = 3,
  kExitDomainError = 4,
};

/// Command-line entry point without the program name in `args`. Reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropres
