#pragma once

#include <ostream>

namespace hyperzeta::cli {

/// Exit statuses of the hyperzeta tool.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the end-to-end tests. Writes
/// results to out and diagnostics to err; never calls std::exit.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperzeta::cli
