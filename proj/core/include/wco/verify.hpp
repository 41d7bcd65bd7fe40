#pragma once

#include <string>
#include <vector>

namespace wco {

struct CriterionResult {
    int index = 0;
    std::string name;
    std::string expected;
    std::string observed;
    std::string tolerance;
    bool passed = false;
    double seconds = 0.0;
};

// The regression suite behind `verify-paper`: fixed worked examples plus the
// property checks. One row per criterion.
std::vector<CriterionResult> verify_suite();

}  // namespace wco
