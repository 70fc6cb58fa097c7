#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumsetlab::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
};

// Runs one command (args excludes the program name). The report goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsetlab::cli
