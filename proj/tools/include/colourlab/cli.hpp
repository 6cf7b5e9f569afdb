#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colourlab::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  ///< a verdict failed or the computation could not finish
inline constexpr int kUsage = 2;   ///< bad flags, parameters or input files

/// Environment variable naming the directory for relative output paths.
inline constexpr const char* kOutputDirEnv = "COLOURLAB_OUTPUT_DIR";

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colourlab::cli
