#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperbinary::cli {

enum ExitStatus : int {
    kOk = 0,
    kDomainError = 1,
    kLimitExceeded = 2,
    kCounterexample = 3,
};

/// Runs one subcommand. `args` excludes the program name. Machine-readable
/// output goes to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperbinary::cli
