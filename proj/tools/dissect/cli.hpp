#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dissect::cli {

// Runs the dissect command line. args excludes the program name. Returns
// the process exit code (see ExitCode in report.hpp).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dissect::cli
