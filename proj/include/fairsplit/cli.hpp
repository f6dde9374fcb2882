#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairsplit::cli {

// Stable exit codes.
enum Exit : int {
    ok = 0,
    schema = 2,
    internal = 3,
    precondition = 4,
    budget = 5,
};

// Runs one command; args excludes the program name. Input files named "-"
// are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fairsplit::cli
