#pragma once

#include <string>
#include <vector>

namespace hcp {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    bool full = true;          // false skips the P_2^3 oracle comparison
    bool inject_fault = false; // negative-control hook: corrupts one formula
};

/// Runs the ten-point verification suite and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// Formats "PASS criterion 1: ..." / "FAIL criterion 7: ..." lines.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace hcp
