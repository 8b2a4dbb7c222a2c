#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdom::cli {

enum ExitStatus : int {
    kOk = 0,
    kViolation = 1,
    kInputError = 2,
    kBudgetExhausted = 3,
};

/// Runs one command line (without the program name). Commands: gamma,
/// metrics, bounds, product, spanning-tree, witness, construct, fuzz.
/// Graphs are read from --in paths or `in`; results go to --out or `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kdom::cli
