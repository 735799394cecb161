#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bomega::cli {

/// Runs the command line tool on `args` (program name excluded), writing
/// results to `out` and diagnostics to `err`. Returns the process exit
/// status: 0 on success, 1 when a verification suite found
/// counterexamples, 2 on parse or usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bomega::cli
