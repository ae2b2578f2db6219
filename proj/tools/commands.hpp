#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grassgeo::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCutLocus = 3;
inline constexpr int kExitGolden = 4;

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace grassgeo::cli
