#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taut::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kVerifyFailed = 3, kInternal = 4 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace taut::cli
