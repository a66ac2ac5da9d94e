#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ja::cli {

// Runs one CLI invocation. Returns the process exit code:
//   0 success, 2 input error, 3 cap exceeded, 4 precondition violation.
// The JSON run report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ja::cli
