#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qvc {

/// Exit codes of the command line tool.
enum ExitCode : int { kOk = 0, kParse = 2, kResource = 3, kUnsupported = 4 };

/// Runs one command. args excludes the program name. The report (or a JSON error object)
/// goes to out, human diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qvc
