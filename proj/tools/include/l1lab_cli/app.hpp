#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace l1lab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitNumerical = 3,
  kExitAuditFailed = 4,
};

const char* version() noexcept;

// Runs the command line `l1lab <args...>` (program name excluded) and returns
// the process exit code. Payloads go to `out`, diagnostics to `err`.
// Options missing from the command line are read from the key=value file
// named by L1LAB_CONFIG, when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l1lab::cli
