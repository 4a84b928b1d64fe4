#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fracopt::cli {

/// Process exit codes of the fracopt tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kSolver = 3,
  kData = 4,
};

/// Entry point shared by main() and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracopt::cli
