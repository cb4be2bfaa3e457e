#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orthokit {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    /// Bad arguments, precondition violation or a proven nonexistence.
    kExitPrecondition = 2,
    /// Internal assertion failure; always a defect.
    kExitInternal = 3,
};

/// Runs one command (args excludes the program name). The JSON payload goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orthokit
