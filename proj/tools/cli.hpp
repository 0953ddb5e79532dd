#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace masseyx::cli {

// Runs one command. `args` excludes the program name. JSON (or the pretty
// rendering) goes to `out`, diagnostics to `err`. Returns 0 on success, 1 on
// a computation error and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace masseyx::cli
