#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsumlab::cli {

/// Runs one invocation; args exclude the program name. Returns the exit code:
/// 0 success, 1 violations or a failed construction, 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsumlab::cli
