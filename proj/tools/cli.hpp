#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superpi::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kError = 2 };

/// Runs one invocation. args[0] is the program name. Returns 0 on success,
/// 1 when the mathematical answer is "false", 2 on usage, input or budget
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace superpi::cli
