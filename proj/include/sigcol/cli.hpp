#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigcol::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitUsage = 64;

/// Runs one invocation; `args` excludes the program name. Normal output goes
/// to `out`, diagnostics (one line each) and scan summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigcol::cli
