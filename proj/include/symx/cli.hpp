#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symx::cli {

// Runs one command line (without the program name).  Returns the exit code:
// 0 success/true, 1 invalid/false, 2 usage, IO or format errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symx::cli
