#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mzv {

/// Runs the `mzv` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on errors or failed verifications, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv
