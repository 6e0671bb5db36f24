#pragma once

// Command-line front-end. `run` takes the arguments after the program name.

#include <iosfwd>
#include <string>
#include <vector>

namespace lambdamaps::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lambdamaps::cli
