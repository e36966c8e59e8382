#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kli::cli {

enum ExitCode : int {
    kOk = 0,
    kIoFailure = 1,
    kInvalidInput = 2,
    kFlowFailure = 3,  // antipodal endpoints or no convergence
};

/// Entry point of the `interp` tool. `args` excludes the program name.
/// Curves and reports go to `out` unless --out names a file; diagnostics go
/// to `err` at the verbosity selected by INTERP_LOG (debug, info, quiet).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kli::cli
