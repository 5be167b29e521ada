#pragma once

#include <string>
#include <vector>

namespace oscp {

/// Batch front-end. `args` excludes the program name. Returns the process
/// exit status: 0 on success, 1 when a validation fails (an MC z-score above
/// 3.5, a convergence violation, or an identity residual above tolerance),
/// 2 on input errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace oscp
