#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace compactlab::cli {

// Dispatches one command line (without the program name). Writes the report
// to `out` and diagnostics to `err`.
//
// Exit status: 0 pass/supported, 1 fail/refuted, 2 usage or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compactlab::cli
