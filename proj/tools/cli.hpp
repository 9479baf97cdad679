#pragma once

#include <ostream>

namespace brauer::cli {

enum ExitCode { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

// Runs one command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brauer::cli
