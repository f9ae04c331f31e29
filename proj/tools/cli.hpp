// cli.hpp
// The macroreal command line, runnable in-process for tests.

#pragma once

#include <ostream>

namespace macroreal::cli {

enum ExitCode : int { kOk = 0, kRuntimeFailure = 1, kUsage = 2 };

// Output is written to `out` only when the command succeeds; diagnostics go
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macroreal::cli
