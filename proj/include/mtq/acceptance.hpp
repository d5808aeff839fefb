#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtq {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// The full verification suite; deterministic for a fixed seed.
std::vector<CriterionResult> run_acceptance(uint64_t seed);

} // namespace mtq
