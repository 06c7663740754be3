#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branch2 {

// Runs one command-line invocation. args excludes the program name. Returns
// the process exit status: 0 success, 1 violated precondition, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace branch2
