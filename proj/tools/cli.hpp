// Command-line front end. Kept in a library so tests can drive it in-process.

#ifndef REGIONSPLIT_TOOLS_CLI_HPP
#define REGIONSPLIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace regionsplit::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regionsplit::cli

#endif  // REGIONSPLIT_TOOLS_CLI_HPP
