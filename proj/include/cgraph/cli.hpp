#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgraph::cli {

enum ExitCode : int { ok = 0, validation_failure = 2, io_failure = 3, config_failure = 4 };

// Runs the command line `args` (without the program name). Normal output goes
// to `out`; error records (one JSON object per line) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgraph::cli
