#include "expind/characterize.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>
#include <stdexcept>

#include "expind/families.hpp"
#include "expind/trees.hpp"

namespace expind {

namespace {

// Degree sequences identify the three patterns among graphs of their
// order: K_{1,3} is the only 4-vertex graph with degrees 3,1,1,1; P_5 the
// only connected one with 1,1,2,2,2; the bull the only one with
// 1,1,2,3,3.
bool induces_claw(const Graph& g, const VertexSet& w) {
    auto [h, map] = induced_subgraph(g, w);
    if (h.m() != 3) return false;
    std::vector<int> deg;
    for (int v = 0; v < 4; ++v) deg.push_back(h.degree(v));
    std::sort(deg.begin(), deg.end());
    return deg == std::vector<int>{1, 1, 1, 3};
}

bool induces_p5_or_bull(const Graph& g, const VertexSet& w) {
    auto [h, map] = induced_subgraph(g, w);
    std::vector<int> deg;
    for (int v = 0; v < 5; ++v) deg.push_back(h.degree(v));
    std::sort(deg.begin(), deg.end());
    if (h.m() == 4)
        return deg == std::vector<int>{1, 1, 2, 2, 2} && is_connected(h);
    if (h.m() == 5) return deg == std::vector<int>{1, 1, 2, 3, 3};
    return false;
}

template <typename Pred>
bool any_subset(const Graph& g, int size, const Pred& pred, VertexSet* found) {
    VertexSet w(size);
    auto rec = [&](auto&& self, int pos, int from) -> bool {
        if (pos == size) {
            if (!pred(g, w)) return false;
            if (found) *found = w;
            return true;
        }
        for (int v = from; v <= g.n() - (size - pos); ++v) {
            w[pos] = v;
            if (self(self, pos + 1, v + 1)) return true;
        }
        return false;
    };
    return g.n() >= size && rec(rec, 0, 0);
}

}  // namespace

bool is_cpb_free(const Graph& g, VertexSet* offending) {
    if (any_subset(g, 4, induces_claw, offending)) return false;
    if (any_subset(g, 5, induces_p5_or_bull, offending)) return false;
    return true;
}

bool hereditary_equality(const Graph& g, int cap) {
    if (g.n() > cap) throw std::invalid_argument("hereditary_equality: order exceeds cap");
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
        VertexSet w;
        for (int v = 0; v < g.n(); ++v)
            if ((mask >> v) & 1) w.push_back(v);
        auto [h, map] = induced_subgraph(g, w);
        if (alpha_e(h).value != alpha(h).value) return false;
    }
    return true;
}

bool tree_equality(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_equality: input is not a tree");
    bool solver_route = alpha_e(t).value == alpha(t).value;
    bool membership_route = t_membership(t).has_value();
    if (solver_route != membership_route) {
        std::cerr << "tree_equality: solver route and membership route disagree on\n"
                  << to_edge_list(t);
        assert(false && "tree_equality route disagreement");
    }
    return solver_route;
}

ExtremalReport classify_extremal(const Graph& g, std::uint64_t node_budget) {
    if (!is_connected(g)) throw std::invalid_argument("classify_extremal: disconnected graph");
    ExtremalReport r;
    r.n = g.n();
    r.diam = diameter(g);
    r.alpha = alpha(g, node_budget).value;
    r.alpha_e = alpha_e(g, node_budget).value;
    r.lower_bound = {2LL * r.diam + 2, 5};
    r.upper_bound = {r.n + 1LL, 2};
    r.meets_lower = 5LL * r.alpha_e == 2LL * r.diam + 2;
    r.meets_upper = 2LL * r.alpha_e == r.n + 1LL;
    r.is_path_5k = is_tree(g) && g.max_degree() <= 2 && g.n() % 5 == 0;
    r.is_full_binary = is_full_binary(g);
    return r;
}

}  // namespace expind
