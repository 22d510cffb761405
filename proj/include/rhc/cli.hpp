#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhc {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2, kExitInternal = 3 };

// Runs one `rhc` command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rhc
