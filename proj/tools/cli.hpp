#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsocle::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`. The default output format comes from
/// QSOCLE_FORMAT when set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsocle::cli
