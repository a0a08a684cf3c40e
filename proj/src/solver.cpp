#include "expind/solver.hpp"

#include <algorithm>
#include <cassert>

#include "expind/weights.hpp"

namespace expind {

namespace {

bool lex_less(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct EisSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    VertexSet cur;
    int best = -1;
    VertexSet best_witness;
    // all-max mode
    bool collect_all = false;
    std::vector<VertexSet> all;

    explicit EisSearch(const Graph& g, std::uint64_t budget) : g(g), budget(budget) {}

    bool adjacent_to_cur(int v) const {
        for (int u : cur)
            if (g.has_edge(u, v)) return true;
        return false;
    }

    void record() {
        int size = static_cast<int>(cur.size());
        if (size > best) {
            best = size;
            best_witness = cur;
            if (collect_all) all.assign(1, cur);
        } else if (size == best) {
            if (collect_all) all.push_back(cur);
            if (lex_less(cur, best_witness)) best_witness = cur;
        }
    }

    void dfs(int from) {
        if (++nodes > budget) throw BudgetExceeded(budget, std::max(best, 0));
        record();
        for (int v = from; v < g.n(); ++v) {
            int remaining = g.n() - v;
            int size = static_cast<int>(cur.size());
            if (collect_all ? size + remaining < best : size + remaining <= best) break;
            if (adjacent_to_cur(v)) continue;
            cur.push_back(v);
            if (is_exponential_independent(g, cur)) dfs(v + 1);
            cur.pop_back();
        }
    }
};

struct AlphaSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    VertexSet cur;
    int best = -1;
    VertexSet best_witness;

    explicit AlphaSearch(const Graph& g, std::uint64_t budget) : g(g), budget(budget) {}

    // Greedy clique cover of the candidates (a coloring of their
    // complement); an independent set meets every clique at most once, so
    // the number of cliques bounds the vertices still addable.
    int color_bound(const std::vector<int>& candidates) const {
        std::vector<int> color(candidates.size());
        int ncolors = 0;
        for (size_t i = 0; i < candidates.size(); ++i) {
            std::vector<bool> used(ncolors + 1, false);
            for (size_t j = 0; j < i; ++j)
                if (!g.has_edge(candidates[j], candidates[i])) used[color[j]] = true;
            int c = 0;
            while (used[c]) ++c;
            color[i] = c;
            ncolors = std::max(ncolors, c + 1);
        }
        return ncolors;
    }

    void dfs(int from) {
        if (++nodes > budget) throw BudgetExceeded(budget, std::max(best, 0));
        int size = static_cast<int>(cur.size());
        if (size > best || (size == best && lex_less(cur, best_witness))) {
            best = size;
            best_witness = cur;
        }
        std::vector<int> candidates;
        for (int v = from; v < g.n(); ++v)
            if (!std::any_of(cur.begin(), cur.end(),
                             [&](int u) { return g.has_edge(u, v); }))
                candidates.push_back(v);
        if (size + color_bound(candidates) <= best) return;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (size + static_cast<int>(candidates.size() - i) <= best) break;
            cur.push_back(candidates[i]);
            dfs(candidates[i] + 1);
            cur.pop_back();
        }
    }
};

}  // namespace

SolveResult alpha_e(const Graph& g, std::uint64_t node_budget) {
    auto start = std::chrono::steady_clock::now();
    EisSearch search(g, node_budget);
    search.dfs(0);
    SolveResult result{search.best, search.best_witness, search.nodes,
                       std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)};
    assert(is_exponential_independent(g, result.witness));
    assert(static_cast<int>(result.witness.size()) == result.value);
    return result;
}

AllMaxResult alpha_e_all_max(const Graph& g, std::uint64_t node_budget) {
    auto start = std::chrono::steady_clock::now();
    EisSearch search(g, node_budget);
    search.collect_all = true;
    search.dfs(0);
    std::sort(search.all.begin(), search.all.end(), lex_less);
    search.all.erase(std::unique(search.all.begin(), search.all.end()), search.all.end());
    return AllMaxResult{search.best, std::move(search.all), search.nodes,
                        std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)};
}

SolveResult alpha(const Graph& g, std::uint64_t node_budget) {
    auto start = std::chrono::steady_clock::now();
    AlphaSearch search(g, node_budget);
    search.dfs(0);
    SolveResult result{search.best, search.best_witness, search.nodes,
                       std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)};
    assert(static_cast<int>(result.witness.size()) == result.value);
    return result;
}

}  // namespace expind
