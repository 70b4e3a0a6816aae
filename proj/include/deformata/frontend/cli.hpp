#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deformata::frontend {

// Runs `deformata <args...>` (args excludes the program name) and returns the exit
// code: 0 pass, 1 property violated, 2 input error, 3 inconclusive.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace deformata::frontend
