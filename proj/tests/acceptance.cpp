// Runs the verification suite and prints one line per criterion.
// Exit status 0 iff every criterion passes.

#include <cstdio>

#include "wco/verify.hpp"

int main() {
    bool all = true;
    for (const auto& r : wco::verify_suite()) {
        all = all && r.passed;
        std::printf("criterion %d [%s] %s (%.2fs)\n", r.index, r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds);
        if (!r.passed) {
            std::printf("  expected:  %s\n", r.expected.c_str());
            std::printf("  observed:  %s\n", r.observed.c_str());
            std::printf("  tolerance: %s\n", r.tolerance.c_str());
        }
    }
    return all ? 0 : 1;
}
