#pragma once

#include <iosfwd>

namespace demon::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2 };

/// Entry point of the `demon` tool; argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace demon::cli
