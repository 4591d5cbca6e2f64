#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatstir::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
    kExitPass = 0,
    kExitMismatch = 1,
    kExitUsage = 2,
    kExitBudget = 3,
    kExitDomain = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatstir::cli
