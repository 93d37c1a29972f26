#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qord {

/// Runs one CLI invocation; `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 usage or domain error, 2 expression parse
/// error, 3 internal consistency failure (an exact identity the engine
/// guarantees did not hold under the oracle).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qord
