#include "expind/trees.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace expind {

bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g);
}

std::vector<int> tree_centers(const Graph& t) {
    int n = t.n();
    if (n == 1) return {0};
    std::vector<int> deg(n), layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            --remaining;
            for (int u : t.neighbors(v))
                if (--deg[u] == 1) next.push_back(u);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string rooted_canonical(const Graph& t, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int v : t.neighbors(root))
        if (v != parent) child_codes.push_back(rooted_canonical(t, v, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::string ahu_canonical(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("ahu_canonical: input is not a tree");
    auto centers = tree_centers(t);
    std::string code = rooted_canonical(t, centers[0]);
    if (centers.size() == 2) code = std::min(code, rooted_canonical(t, centers[1]));
    return code;
}

std::vector<Graph> enumerate_free_trees(int n) {
    constexpr int kCap = 16;
    if (n < 1 || n > kCap)
        throw std::invalid_argument("enumerate_free_trees: n must be in 1..16");
    std::vector<Graph> current = {Graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        for (const Graph& t : current) {
            auto edges = t.edges();
            for (int attach = 0; attach < t.n(); ++attach) {
                auto ext = edges;
                ext.emplace_back(attach, t.n());
                Graph bigger(size, ext);
                if (seen.insert(ahu_canonical(bigger)).second) next.push_back(bigger);
            }
        }
        current = std::move(next);
    }
    return current;
}

std::vector<Graph> enumerate_labeled_graphs(int n) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("enumerate_labeled_graphs: n must be in 1..6");
    int npairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(1u << npairs);
    for (unsigned mask = 0; mask < (1u << npairs); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < npairs; ++b)
            if ((mask >> b) & 1) edges.push_back(pairs[b]);
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace expind
