#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equitri::cli {

// Runs one CLI invocation. `args` excludes the program name.
// Returns the process exit code: 0 success, 1 computational error,
// 2 usage error. The payload (JSON or SVG) goes to `out`; diagnostics
// go to `err` as a JSON object with "error" and "message" fields.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace equitri::cli
