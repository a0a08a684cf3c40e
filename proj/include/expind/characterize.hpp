#ifndef EXPIND_CHARACTERIZE_HPP
#define EXPIND_CHARACTERIZE_HPP

#include <cstdint>
#include <optional>

#include "expind/graph.hpp"
#include "expind/solver.hpp"

namespace expind {

struct Rational {
    long long num = 0;
    long long den = 1;
};

struct ExtremalReport {
    int n = 0;
    ExtendedDist diam = 0;
    int alpha = 0;
    int alpha_e = 0;
    Rational lower_bound;  // (2*diam+2)/5
    Rational upper_bound;  // (n+1)/2
    bool meets_lower = false;
    bool meets_upper = false;
    bool is_path_5k = false;
    bool is_full_binary = false;
};

// True iff no subset of vertices induces K_{1,3}, P_5 or the bull. On
// failure offending receives the first such subset found.
bool is_cpb_free(const Graph& g, VertexSet* offending = nullptr);

// True iff alpha_e(H) = alpha(H) for every nonempty induced subgraph H,
// by enumerating all 2^n - 1 subsets. Throws above the cap.
bool hereditary_equality(const Graph& g, int cap = 10);

// alpha_e(T) = alpha(T), computed with the solver and cross-checked
// against t_membership. A disagreement between the two routes fails hard
// in assert-enabled builds and warns on stderr otherwise.
bool tree_equality(const Graph& t);

ExtremalReport classify_extremal(const Graph& g,
                                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace expind

#endif
