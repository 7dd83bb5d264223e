#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Runs one command (args excludes the program name) and writes exactly one
/// JSON document to `out`. Diagnostics and help text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibniz::cli
