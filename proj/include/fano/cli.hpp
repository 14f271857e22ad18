#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fano::cli {

/// Runs one subcommand; `args` excludes the program name. The result
/// document goes to `out`, diagnostics to `err`. Returns the exit code:
/// 0 on success, 1 on parse/usage errors, 2 on precondition failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano::cli
