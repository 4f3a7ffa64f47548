#pragma once

#include <string>
#include <vector>

namespace brauer {

// Outcome of one named check: pass/fail, wall time, and a short note with
// the measured quantity (a distance, a count, or the first failing case).
struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

// Cheap cross-module consistency checks; a few seconds total.
std::vector<CheckResult> run_invariants();

// The nine release gates, in order, with tolerances pinned in the
// implementation.  Heavy: several minutes of eigenvalue sweeps.
std::vector<CheckResult> run_acceptance();

} // namespace brauer
