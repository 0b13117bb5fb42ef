#pragma once

#include <iosfwd>

namespace mudef::cli {

enum ExitCode : int { kOk = 0, kConstantFailure = 1, kInputError = 2, kCapRefusal = 3 };

/// Runs the command line; the JSON report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count from MUDEF_WORKERS, or the hardware concurrency.
unsigned workers_from_env();

}  // namespace mudef::cli
