#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace s7lab::cli {

enum ExitCode { kPass = 0, kFailure = 1, kUsage = 2 };

// Parses argv and runs one subcommand. Results go to out (or the --output file),
// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s7lab::cli
