// Deterministic command-line front end: identical invocations produce
// byte-identical output.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dihext::cli {

// Runs the command line given by args (program name excluded), writing the
// payload to out and diagnostics to err.  Returns the process exit code:
// 0 on success, 2 for usage or input errors, 3 when the internal ext
// cross-check fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dihext::cli
