#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lgc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Typed errors go
/// to `err` as one line; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgc::cli
