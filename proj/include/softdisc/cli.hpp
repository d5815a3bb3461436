#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace softdisc::cli {

// Entry point of the command-line tool, with injectable streams so tests can
// drive it end to end. `args` excludes the program name.
//
// Exit codes: 0 success, 1 infeasible input or saturated sampler, 2 usage or
// input-format error, 3 violated internal invariant (or failed verification).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace softdisc::cli
