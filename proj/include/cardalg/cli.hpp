#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cardalg {

/// Runs the command line `args` (without the program name). Returns the exit
/// status: 0 success, 1 check failure or evaluation error, 2 usage, parse or
/// configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cardalg
