#ifndef POWERMONOID_TOOLS_CLI_HPP
#define POWERMONOID_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace powermonoid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace powermonoid::cli

#endif  // POWERMONOID_TOOLS_CLI_HPP
