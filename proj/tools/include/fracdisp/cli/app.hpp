#pragma once

#include <iosfwd>

namespace fracdisp::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Parses the command line, runs one subcommand and writes its artifacts.
/// Returns the exit status (0 pass, 1 check failed, 2 config error, 3 numerical abort).
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracdisp::cli
