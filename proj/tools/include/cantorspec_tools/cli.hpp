#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cantorspec::cli {

/// Runs one command line (program name excluded). Returns the process exit code:
/// 0 success, 1 a check reported a failure, 2 invalid model, other CLI11 codes
/// for usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cantorspec::cli
