#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliqueowf::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;     // verify rejected, or no preimage found
inline constexpr int kExitUsage = 2;     // bad flags, unparsable files, domain errors
inline constexpr int kExitExhausted = 3; // random string too short
inline constexpr int kExitGuard = 4;     // a feasibility guard was exceeded

/// Runs one command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliqueowf::cli
