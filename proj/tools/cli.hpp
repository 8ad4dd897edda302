#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccc::cli {

/// Parses and executes one invocation (argv without the program name).
/// Exit codes: 0 success, 1 verification failure, 2 invalid input,
/// 3 unsupported parameters.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccc::cli
