#pragma once

#include <string>
#include <vector>

namespace qjpm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured values, bounds, witnesses
};

// Cross-module invariant checks at desk scale, each fast enough to run on
// every invocation. One entry per check; a fresh build passes all of them
// (the composite-codec counterexample check passes by *detecting* the
// planted disagreement).
std::vector<CheckResult> run_verification_suite();

}  // namespace qjpm
