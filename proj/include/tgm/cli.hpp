#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgm::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 validation or mathematical failure, 2 parse/usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgm::cli
