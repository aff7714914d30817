#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace enclose {

struct SolveOptions {
    std::uint64_t seed = 0;
    int max_retries = 100;        // randomized rounding attempts
    std::uint64_t budget = 1 << 20;  // exhaustive-search subset cap
};

struct Solution {
    std::vector<int> selected;  // sorted obstacle indices
    std::string method;         // "mincut" | "lp" | "exact"
    long objective = 0;         // number of selected obstacles
    int attempts = 1;
    std::uint64_t seed = 0;
};

}  // namespace enclose
