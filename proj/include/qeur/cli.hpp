#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeur::cli {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 on success, 2 on parse or validation failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeur::cli
