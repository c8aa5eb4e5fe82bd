#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsum::cli {

// Exit codes: 0 success, 1 verification failures, 2 usage or schema error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsum::cli
