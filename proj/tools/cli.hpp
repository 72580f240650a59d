#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;        // parse or validation error
inline constexpr int kExitTotalConflict = 2;  // Dempster's rule indeterminate

/// Runs the `nmp` command line. `args[0]` is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nmp::cli
