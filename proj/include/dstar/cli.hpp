#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dstar::cli {

/// Runs one subcommand. args excludes the program name.
/// Exit codes: 0 success, 1 domain or validation error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dstar::cli
