#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace magnus {

/// Run one CLI invocation. Returns the process exit status: 0 on success,
/// 1 on domain precondition failures, 2 on parse or configuration errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace magnus
