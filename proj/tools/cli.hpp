#pragma once

#include <ostream>

namespace bng::cli {

/// Exit codes: 0 success or verified, 1 counterexample found, 2 invalid input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `argv` (argv[0] is the program name), writing data
/// to `out` and diagnostics and progress to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bng::cli
