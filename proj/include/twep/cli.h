#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twep {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // a verification or bound check failed
    kExitUsage = 2,    // bad arguments, unknown protocol, or a size limit
};

/// Runs the command line `args` (without the program name). Structured results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace twep
