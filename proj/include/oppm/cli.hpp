// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_CLI_HPP
#define OPPM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace oppm::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace oppm::cli

#endif  // OPPM_CLI_HPP
