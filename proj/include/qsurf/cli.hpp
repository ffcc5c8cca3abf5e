#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsurf {

// Runs the command line (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsurf
