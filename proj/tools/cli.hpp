#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subapprox::cli {

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out names a file; diagnostics and experiment summaries go
/// to `err`. Returns 0 on success, 2 on usage errors, 1 when a computation
/// fails or an experiment records a violation.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subapprox::cli
