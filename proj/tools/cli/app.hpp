#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symirr::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidation = 3,
  kExitDomain = 4,
  kExitSuiteMismatch = 5,
};

// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symirr::cli
