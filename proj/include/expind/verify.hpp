#ifndef EXPIND_VERIFY_HPP
#define EXPIND_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "expind/solver.hpp"

namespace expind {

struct RunConfig {
    int max_n = 0;  // 0 = per-theorem default
    std::uint64_t node_budget = kDefaultNodeBudget;
    int threads = 1;
    std::uint64_t seed = 0;
};

struct VerificationFailure {
    std::string graph;     // edge-list serialization of the instance
    std::string expected;
    std::string got;
};

struct VerificationReport {
    std::string theorem_id;
    std::string parameter_range;
    std::uint64_t instances_checked = 0;
    std::vector<VerificationFailure> failures;
    std::chrono::milliseconds elapsed{0};
    bool passed = false;
};

// Known ids: thm1iii, thm2, thm2b, thm3i, thm3ii, thm3iii, thm4, thm5,
// thm6, lem1, lem2. Throws std::invalid_argument on an unknown id.
VerificationReport run_verify(const std::string& theorem_id, const RunConfig& config);

const std::vector<std::string>& known_theorem_ids();

}  // namespace expind

#endif
