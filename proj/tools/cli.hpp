#pragma once

#include <iosfwd>

namespace slgen::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

/// Runs the command line in-process; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slgen::cli
