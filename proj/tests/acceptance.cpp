// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.
#include <cstdio>

#include "mtq/acceptance.hpp"

int main() {
    const auto results = mtq::run_acceptance(0);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", r.passed ? "PASS" : "FAIL",
                    r.index, r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
        all = all && r.passed;
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return all ? 0 : 1;
}
