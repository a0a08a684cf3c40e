#ifndef EXPIND_WEIGHTS_HPP
#define EXPIND_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "expind/dyadic.hpp"
#include "expind/graph.hpp"

namespace expind {

// Relative distance dist_{(G,S)}(u,v) for v in S: shortest u-v path with
// exactly one endvertex in S and no internal vertex in S. 0 when u = v in
// S, infinite when u and v are distinct members of S.
ExtendedDist dist_rel(const Graph& g, const VertexSet& s, int u, int v);

// All relative distances from u to the members of S at once: one BFS from
// u in G - S, then each v in S is finished through its non-S neighbors.
// Pointwise equal to dist_rel (the per-target definition stays around as
// the test oracle). Result is indexed parallel to S.
std::vector<ExtendedDist> all_dists_from(const Graph& g, const VertexSet& s, int u);

struct WeightContribution {
    int source;         // vertex of S
    ExtendedDist dist;  // dist_{(G,S)}(u, source)
    Dyadic term;        // (1/2)^(dist-1), zero for INF_DIST
};

struct WeightReport {
    int vertex;
    Dyadic total;
    std::vector<WeightContribution> contributions;
};

// w_{(G,S)}(u): exact dyadic sum of (1/2)^(dist-1) over S; the self term
// of a member is 2, unreachable sources contribute 0.
WeightReport weight(const Graph& g, const VertexSet& s, int u);
Dyadic weight_value(const Graph& g, const VertexSet& s, int u);

struct Violation {
    int vertex;
    Dyadic weight;
};

// S is exponential independent iff w_{(G,S\{u})}(u) < 1 for every u in S.
// On failure reports the first (smallest-id) violating member.
bool is_exponential_independent(const Graph& g, const VertexSet& s,
                                std::optional<Violation>* violation = nullptr);

// S is exponential dominating iff w_{(G,S)}(u) >= 1 for every u outside S.
bool is_exponential_dominating(const Graph& g, const VertexSet& s,
                               std::optional<Violation>* violation = nullptr);

}  // namespace expind

#endif
