#ifndef DARBOUX_TOOLS_CLI_HPP
#define DARBOUX_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace darboux::cli {

/// Runs the command line given as plain arguments (no program name).
/// Returns the process exit code: 0 success, 1 usage error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace darboux::cli

#endif
