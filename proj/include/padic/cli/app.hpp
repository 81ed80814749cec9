#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padic::cli {

enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitDomain = 3,
    /// A broken internal invariant; never expected.
    kExitInternal = 4,
};

/// Runs the command line (args excludes the program name), writing results
/// to out and messages to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
