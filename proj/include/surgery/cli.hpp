#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surgery::cli {

// Exit statuses of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Runs the tool on argv-style arguments (args[0] is the program name).
// Results go to out, diagnostics to err. The SURGERY_TABLE environment
// variable names a default table file when --table is absent.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surgery::cli
