#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdp::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, budget_exceeded = 3 };

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdp::cli
