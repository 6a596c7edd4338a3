#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasitone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs the command line `args` (without the program name). Tables go to
/// `out`; diagnostics go to `err` prefixed with the error name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasitone::cli
