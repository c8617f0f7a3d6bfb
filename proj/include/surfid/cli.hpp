#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace surfid {

/// Command-line entry point (arguments exclude the program name).
/// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfid
