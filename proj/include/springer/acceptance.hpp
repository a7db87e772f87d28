#pragma once

#include <string>
#include <vector>

namespace springer {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// The verification suite behind both the acceptance binary and the CLI
/// selftest command. allow_large extends the dimension-law sweep to m = 6.
std::vector<CriterionResult> run_acceptance(bool allow_large = false);

}  // namespace springer
