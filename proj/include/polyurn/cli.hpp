#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyurn::cli {

// Process exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;      // bad flags, unknown names, malformed input
inline constexpr int kCapExceeded = 3;     // request beyond a size/resource cap
inline constexpr int kVerifyFailed = 4;    // a verification entry did not reproduce

// Dispatches one command line (without the program name) and writes all
// output to the given streams.  Never throws; every outcome is an exit
// code.  Identical argument vectors produce identical output bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyurn::cli
