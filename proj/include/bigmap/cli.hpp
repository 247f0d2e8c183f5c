#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigmap::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUndecided = 2 };

/// Parses args (without the program name), runs the command and writes its
/// output. Returns 0 on success, 1 on a parse or validation error, 2 when an
/// oracle ran out of depth.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bigmap::cli
