#ifndef EXPIND_FAMILIES_HPP
#define EXPIND_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expind/graph.hpp"

namespace expind {

enum class FamilyKind { PATH, CYCLE, STAR, FULL_BINARY, BULL, T1, T2, T3, T4, T5, P1, P8 };

std::string family_kind_name(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

struct FamilyDescriptor {
    FamilyKind kind;
    int k = 0;                            // order / leaf count / comb length
    std::map<std::string, int> labeling;  // role name -> vertex id
};

// Named graph families. Parameter meaning: PATH/CYCLE order, STAR leaf
// count, FULL_BINARY leaf count (gives the left-leaning caterpillar
// shape), BULL ignores k, T1..T5 the comb length (T4 needs k >= 3).
std::pair<Graph, FamilyDescriptor> generate(FamilyKind kind, int k);

// One representative per isomorphism class of free trees on n vertices
// that admit a full-binary rooting; n must be odd.
std::vector<Graph> enumerate_full_binary(int n);

// True iff some rooting of G makes every vertex have zero or two
// children; reports a valid root.
bool is_full_binary(const Graph& g, int* root = nullptr);

// Identification of T as a member of the family of trees with
// alpha_e = alpha: {P1, P8} + T1(k)..T3(k), T5(k) for k >= 1 + T4(k) for
// k >= 3. Matching is by AHU code against the candidates of equal order.
std::optional<FamilyDescriptor> t_membership(const Graph& t);

// The constructive lower-bound set along a diametral shortest path:
// positions congruent to 0 or 2 mod 5. Always an exponential independent
// set of size >= (2*diam+2)/5.
VertexSet theorem2_construction(const Graph& g);

// The subcubic-tree lower bound construction: the better of the leaf set
// (dropping one leaf when there is no degree-2 vertex) and the per-path
// sets of T - N[V3]. Requires max degree <= 3 and n >= 4; size is always
// >= ceil((2n+8)/13).
VertexSet theorem4_construction(const Graph& t);

}  // namespace expind

#endif
