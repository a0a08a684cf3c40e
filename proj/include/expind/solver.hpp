#ifndef EXPIND_SOLVER_HPP
#define EXPIND_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "expind/graph.hpp"

namespace expind {

constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SolveResult {
    int value = 0;
    VertexSet witness;  // lexicographically least maximum set
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

struct AllMaxResult {
    int value = 0;
    std::vector<VertexSet> witnesses;  // lexicographically sorted, exhaustive
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t budget, int best_lower_bound)
        : std::runtime_error("node budget exceeded"),
          budget(budget),
          best_lower_bound(best_lower_bound) {}
    std::uint64_t budget;
    int best_lower_bound;  // size of the best set found before giving up
};

// Exact exponential independence number by backtracking in ascending
// vertex order; pruning leans on heredity (subsets of exponential
// independent sets stay exponential independent).
SolveResult alpha_e(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Every maximum exponential independent set.
AllMaxResult alpha_e_all_max(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Plain independence number, same skeleton with a greedy-coloring bound.
SolveResult alpha(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace expind

#endif
