#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparse_ssa {

/// Entry point of the sparse-ssa command line tool. `args[0]` is the
/// program name. Returns the process exit code:
///   0 success, 1 verify mismatch, 2 usage or validation error, 3 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sparse_ssa
