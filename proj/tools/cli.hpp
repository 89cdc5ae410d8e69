#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsep::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name) writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsep::cli
