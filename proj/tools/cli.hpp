#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symprod::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidAlgebra = 1,
    kParseFailure = 2,
    kBadExpression = 3,
    kNotASurface = 4,
    kPropertyFailure = 5,
    kBettiMismatch = 6,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Worker count from an explicit request; 0 means every hardware thread.
unsigned resolve_threads(unsigned requested);

}  // namespace symprod::cli
