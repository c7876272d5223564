#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semifree::cli {

enum ExitCode : int {
    Ok = 0,
    ParseFailure = 2,
    ValidationFailure = 3,
    TheoremFailure = 4,
    Internal = 70,
};

/// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace semifree::cli
