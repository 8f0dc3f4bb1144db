#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperring::cli {

enum ExitCode : int { kOk = 0, kPropertyFails = 1, kUsage = 2, kBudget = 3 };

/// The hyperring-lab command line; `args` excludes the program name.
auto run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) -> int;

}  // namespace hyperring::cli
