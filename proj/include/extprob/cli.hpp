#pragma once

#include <string>
#include <vector>

namespace extprob::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kInputError = 3 };

/// Runs one command. `args` excludes the program name. Output is buffered:
/// on any error `out` is left empty and the message goes to `err`.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace extprob::cli
