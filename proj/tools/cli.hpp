#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bioflag::cli {

/// Runs one command line. Returns 0 when every check passes, 1 when a check
/// fails (the report is still written) and 2 on an invalid configuration.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bioflag::cli
