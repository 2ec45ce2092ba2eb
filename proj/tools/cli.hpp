#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invunits::cli {

// Runs one invocation; args excludes the program name. Returns the exit
// status: 0 success, 1 domain error, 2 I/O or parse error.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace invunits::cli
