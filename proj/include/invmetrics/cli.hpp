#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "invmetrics/foundations.hpp"

namespace invmetrics::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kBoundsOnly = 3,
  kDomain = 4,
  kVerifyFailed = 5,
};

/// Exit code for an error escaping an evaluation.
int exit_code_for(ErrorKind kind);

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invmetrics::cli
