#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flipdist::cli {

// Runs one command; `args` excludes the program name. Returns the exit code:
// 0 success, 2 invalid input, 3 a search cap was hit, 1 anything else.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace flipdist::cli
