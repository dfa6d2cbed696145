#ifndef MCS_TOOLS_CLI_APP_HPP
#define MCS_TOOLS_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mcs::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kDegraded = 2,
    kGuardExceeded = 3,
};

/// Runs one `mcs` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcs::cli

#endif
