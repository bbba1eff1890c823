#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratcensus::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failed = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratcensus::cli
