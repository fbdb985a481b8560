#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscwalk {

// Dispatches one CLI invocation. Exit codes: 0 success, 1 verification
// failure, 2 argument errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscwalk
