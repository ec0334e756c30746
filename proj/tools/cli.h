#ifndef ATM_TOOLS_CLI_H_
#define ATM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace atm::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the `atm` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace atm::cli

#endif  // ATM_TOOLS_CLI_H_
