#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zpk {

struct VerifyOptions {
    std::uint64_t p_max = 19;         // exhaustive tier upper bound
    unsigned k_max = 3;
    std::uint64_t sampled_p_max = 97; // sampled tier upper bound
    std::uint64_t seed = 0;           // drives the sampled checks
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The structural property suites: group structure, zero sums, dfs loops,
/// triplet conditions, cubic roots, Hensel counts, EDS, witnesses. Every
/// expected value is either derived from an independent oracle inside the
/// check or pinned from the published tables.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace zpk
