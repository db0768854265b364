#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace projconst::cli {

enum ExitCode : int { kOk = 0, kIoError = 1, kUsage = 2, kVerifyFailed = 3 };

/// Runs the `projconst` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Largest construction parameter s accepted; PROJCONST_MAX_S, default 7.
int max_s_from_env();

}  // namespace projconst::cli
