#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abperfect::cli {

enum ExitCode : int {
    kOk = 0,
    kCounterexample = 1,
    kInputError = 2,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`; diagnostics and timing go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace abperfect::cli
