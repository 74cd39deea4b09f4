#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fxgy {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitResource = 4;

/// Runs the command line (args excludes the program name). Results go to
/// `out`, diagnostics and wall time to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fxgy
