#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mularith::cli {

// Exit-code contract of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kPropertyFailure = 1,
    kUsageError = 2,
    kGuardViolation = 3,
};

/// Runs the tool on `args` (without the program name), writing records to
/// `out` (unless --out redirects them) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mularith::cli
