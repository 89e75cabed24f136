#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sedeon::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2 };

/// Run one command line (args excludes the program name). Output goes to out,
/// diagnostics to err. Returns 0 on pass, 1 on a failed check, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sedeon::cli
