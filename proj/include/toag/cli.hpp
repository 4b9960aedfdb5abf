#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toag {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitExhausted = 3;

/// Runs one command line (without the program name).  Reports go to `out`,
/// diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toag
