#include <doctest.h>

#include <random>

#include "expind/families.hpp"
#include "expind/trees.hpp"
#include "expind/weights.hpp"
#include "oracles.hpp"

using namespace expind;

namespace {

Graph random_graph(std::mt19937_64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (rng() & 1) s.push_back(v);
    return s;
}

}  // namespace

TEST_CASE("relative distance basics") {
    Graph star = generate(FamilyKind::STAR, 4).first;  // center 0, leaves 1..4
    VertexSet s = {0, 2, 3, 4};                        // center plus all leaves but u=1
    CHECK(dist_rel(star, s, 1, 2) == INF_DIST);        // shielded by the center
    CHECK(dist_rel(star, s, 1, 0) == 1);
    CHECK(dist_rel(star, s, 2, 2) == 0);
    CHECK(dist_rel(star, s, 2, 3) == INF_DIST);        // distinct members of S
    CHECK_THROWS(dist_rel(star, s, 0, 1));             // 1 is not in S
}

TEST_CASE("bundled relative distances") {
    Graph p5 = generate(FamilyKind::PATH, 5).first;
    CHECK(all_dists_from(p5, {0, 2}, 4) == std::vector<ExtendedDist>{INF_DIST, 2});
    CHECK(all_dists_from(p5, {0, 2}, 1) == std::vector<ExtendedDist>{1, 1});
    CHECK(all_dists_from(p5, {0, 2}, 2) == std::vector<ExtendedDist>{INF_DIST, 0});
}

TEST_CASE("bundled distances agree with the definitional oracle") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        Graph g = random_graph(rng, 12);
        VertexSet s = random_subset(rng, g.n());
        int u = static_cast<int>(rng() % g.n());
        auto bundled = all_dists_from(g, s, u);
        for (size_t j = 0; j < s.size(); ++j) CHECK(bundled[j] == dist_rel(g, s, u, s[j]));
    }
    // and on every tree up to n = 8 with sampled subsets
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : enumerate_free_trees(n))
            for (int rep = 0; rep < 20; ++rep) {
                VertexSet s = random_subset(rng, n);
                int u = static_cast<int>(rng() % n);
                auto bundled = all_dists_from(t, s, u);
                for (size_t j = 0; j < s.size(); ++j)
                    CHECK(bundled[j] == dist_rel(t, s, u, s[j]));
            }
}

TEST_CASE("weight values from the star") {
    for (int leaves : {3, 4, 6, 9}) {
        Graph star = generate(FamilyKind::STAR, leaves).first;
        int n = leaves + 1;
        VertexSet everyone;
        for (int v = 0; v < n; ++v) everyone.push_back(v);

        // members weigh 2 against any set containing them
        CHECK(weight_value(star, everyone, 1) == Dyadic(BigInt(2)));

        // leaf u against S = V \ {u}: exactly 1
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (v != 1) rest.push_back(v);
        CHECK(weight_value(star, rest, 1) == Dyadic::one());

        // drop the center too: (n-2)/2
        VertexSet no_center;
        for (int v = 1; v < n; ++v)
            if (v != 1) no_center.push_back(v);
        CHECK(weight_value(star, no_center, 1) == Dyadic(BigInt(n - 2), 1));
    }
}

TEST_CASE("weight report structure") {
    Graph p5 = generate(FamilyKind::PATH, 5).first;
    WeightReport report = weight(p5, {0, 2}, 4);
    CHECK(report.vertex == 4);
    Dyadic total;
    for (const auto& c : report.contributions) {
        total += c.term;
        if (c.dist == INF_DIST) CHECK(c.term.is_zero());
    }
    CHECK(total == report.total);
    CHECK(report.total == Dyadic(BigInt(1), 1));  // only v2 contributes 1/2
}

TEST_CASE("exponential independence checker") {
    Graph p5 = generate(FamilyKind::PATH, 5).first;
    std::optional<Violation> violation;
    CHECK_FALSE(is_exponential_independent(p5, {0, 2, 4}, &violation));
    REQUIRE(violation.has_value());
    CHECK(violation->vertex == 2);
    CHECK(violation->weight == Dyadic::one());

    CHECK(is_exponential_independent(p5, {0, 2}));
    CHECK(is_exponential_independent(p5, {}));
    CHECK(is_exponential_independent(p5, {3}));

    // any independent pair is exponential independent
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 10);
        for (int a = 0; a < g.n(); ++a)
            for (int b = a + 1; b < g.n(); ++b)
                if (!g.has_edge(a, b)) CHECK(is_exponential_independent(g, {a, b}));
    }
}

TEST_CASE("exponential domination checker") {
    Graph p5 = generate(FamilyKind::PATH, 5).first;
    VertexSet everyone = {0, 1, 2, 3, 4};
    CHECK(is_exponential_dominating(p5, everyone));
    std::optional<Violation> violation;
    CHECK_FALSE(is_exponential_dominating(p5, {2}, &violation));
    CHECK(violation->vertex == 0);
    CHECK(violation->weight == Dyadic(BigInt(1), 1));

    Graph star = generate(FamilyKind::STAR, 4).first;
    CHECK(is_exponential_dominating(star, {0}));

    CHECK(is_exponential_dominating(Graph(0, {}), {}));
    CHECK_FALSE(is_exponential_dominating(Graph(1, {}), {}));
}

TEST_CASE("weight is not monotone under removals from S") {
    // K_{1,6}: leaf weight against V \ {u} is 1, against V \ {u, center}
    // it jumps to 5/2
    Graph star = generate(FamilyKind::STAR, 6).first;
    VertexSet rest = {0, 2, 3, 4, 5, 6};
    VertexSet no_center = {2, 3, 4, 5, 6};
    CHECK(weight_value(star, rest, 1) == Dyadic::one());
    CHECK(weight_value(star, no_center, 1) == Dyadic(BigInt(5), 1));
    // while on K_{1,2} the same removal shrinks the weight below 1
    Graph small = generate(FamilyKind::STAR, 2).first;
    CHECK(weight_value(small, {0, 2}, 1) == Dyadic::one());
    CHECK(weight_value(small, {2}, 1) == Dyadic(BigInt(1), 1));
}

TEST_CASE("members of other components contribute nothing") {
    Graph two_paths = from_edge_list("6 4\n0 1\n1 2\n3 4\n4 5\n");
    CHECK(weight_value(two_paths, {3, 5}, 0).is_zero());
    CHECK(is_exponential_independent(two_paths, {0, 2, 3, 5}));
}

TEST_CASE("exponential independence survives subgraphs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 9);
        VertexSet s = random_subset(rng, g.n());
        if (!is_exponential_independent(g, s)) continue;
        // delete a random subset of edges
        std::vector<std::pair<int, int>> kept;
        for (auto e : g.edges())
            if (rng() & 1) kept.push_back(e);
        CHECK(is_exponential_independent(Graph(g.n(), kept), s));
    }
}

TEST_CASE("subsets of exponential independent sets stay exponential independent") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 9);
        VertexSet s = random_subset(rng, g.n());
        if (!is_exponential_independent(g, s)) continue;
        for (int rep = 0; rep < 20; ++rep) {
            VertexSet sub;
            for (int v : s)
                if (rng() & 1) sub.push_back(v);
            CHECK(is_exponential_independent(g, sub));
        }
    }
}
