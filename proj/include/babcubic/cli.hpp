#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace babcubic {

// Runs the command line (without the program name). Exit status: 0 success,
// 1 domain error (NotFound, NoRationalSolution, ExpectationMismatch, ...),
// 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace babcubic
