#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nevlab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitDomain = 3,
};

/// Entry point behind the `nevlab` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nevlab::cli
