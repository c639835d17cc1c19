#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tight {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitVerification = 3 };

/// Runs tightcheck with argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tight
