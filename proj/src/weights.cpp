#include "expind/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace expind {

ExtendedDist dist_rel(const Graph& g, const VertexSet& s, int u, int v) {
    if (!set_contains(s, v)) throw std::invalid_argument("dist_rel: v not in S");
    if (u == v) return 0;
    if (set_contains(s, u)) return INF_DIST;
    // distance of u and v in G - (S \ {v})
    VertexSet blocked;
    blocked.reserve(s.size());
    for (int w : s)
        if (w != v) blocked.push_back(w);
    auto dist = bfs_distances(g, u, blocked);
    return dist[v];
}

std::vector<ExtendedDist> all_dists_from(const Graph& g, const VertexSet& s, int u) {
    std::vector<ExtendedDist> out(s.size(), INF_DIST);
    if (set_contains(s, u)) {
        // self distance 0, every other member infinite
        for (size_t i = 0; i < s.size(); ++i)
            if (s[i] == u) out[i] = 0;
        return out;
    }
    auto base = bfs_distances(g, u, s);  // one BFS in G - S
    for (size_t i = 0; i < s.size(); ++i) {
        ExtendedDist best = INF_DIST;
        for (int w : g.neighbors(s[i])) {
            if (set_contains(s, w)) continue;
            if (base[w] != INF_DIST) best = std::min(best, base[w] + 1);
        }
        out[i] = best;
    }
    return out;
}

WeightReport weight(const Graph& g, const VertexSet& s, int u) {
    WeightReport report{u, Dyadic::zero(), {}};
    auto dists = all_dists_from(g, s, u);
    report.contributions.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        Dyadic term = dists[i] == INF_DIST ? Dyadic::zero() : Dyadic::half_pow(dists[i] - 1);
        report.total += term;
        report.contributions.push_back({s[i], dists[i], std::move(term)});
    }
    return report;
}

Dyadic weight_value(const Graph& g, const VertexSet& s, int u) {
    Dyadic total;
    for (ExtendedDist d : all_dists_from(g, s, u))
        if (d != INF_DIST) total += Dyadic::half_pow(d - 1);
    return total;
}

bool is_exponential_independent(const Graph& g, const VertexSet& s,
                                std::optional<Violation>* violation) {
    if (violation) violation->reset();
    for (int u : s) {
        VertexSet rest;
        rest.reserve(s.size() - 1);
        for (int v : s)
            if (v != u) rest.push_back(v);
        Dyadic w = weight_value(g, rest, u);
        if (w >= Dyadic::one()) {
            if (violation) *violation = Violation{u, std::move(w)};
            return false;
        }
    }
    return true;
}

bool is_exponential_dominating(const Graph& g, const VertexSet& s,
                               std::optional<Violation>* violation) {
    if (violation) violation->reset();
    for (int u = 0; u < g.n(); ++u) {
        if (set_contains(s, u)) continue;
        Dyadic w = weight_value(g, s, u);
        if (w < Dyadic::one()) {
            if (violation) *violation = Violation{u, std::move(w)};
            return false;
        }
    }
    return true;
}

}  // namespace expind
