#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace calamity::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // verification failure or non-uniform classification
inline constexpr int kUsage = 2;        // parse or range error

/// Runs the CLI. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace calamity::cli
