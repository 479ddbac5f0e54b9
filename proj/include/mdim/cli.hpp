#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdim {

// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one CLI invocation. args excludes the program name. Graph input is
// read from the named file, or from `in` when no file (or "-") is given.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace mdim
