#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permsum::cli {

// Exit codes: 0 success or witness found, 1 not found / verification
// failure, 2 invalid input, 3 internal construction failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permsum::cli
