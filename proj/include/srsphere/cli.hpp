#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srsphere {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 verification failure (or internal error),
/// 2 usage error. Output goes to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srsphere
