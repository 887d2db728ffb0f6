#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cimmino::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kMaxIterations = 2,
  kDiverged = 3,
};

/// Entry point behind the `cimmino` executable: subcommands solve,
/// analyze, sweep, envelope and demo. Data goes to `out` or to files,
/// diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Same, with argv[0] omitted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2.5,-3" -> {1, 2.5, -3}. Throws cimmino::DomainError on bad input.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace cimmino::cli
