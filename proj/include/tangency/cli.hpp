#ifndef TANGENCY_CLI_HPP
#define TANGENCY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tangency::cli {

enum ExitCode : int { Ok = 0, ValidationError = 2, InternalError = 3 };

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangency::cli

#endif
