#include <doctest.h>

#include <random>

#include "expind/families.hpp"
#include "expind/solver.hpp"
#include "expind/trees.hpp"
#include "expind/weights.hpp"
#include "oracles.hpp"

using namespace expind;

TEST_CASE("alpha_e on the named small graphs") {
    CHECK(alpha_e(generate(FamilyKind::PATH, 5).first).value == 2);
    CHECK(alpha_e(generate(FamilyKind::BULL, 0).first).value == 2);
    CHECK(alpha_e(generate(FamilyKind::STAR, 5).first).value == 2);

    // complete binary tree on 7 vertices: 4 leaves and nothing better
    Graph fbt = from_edge_list("7 6\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6\n");
    auto result = alpha_e(fbt);
    CHECK(result.value == 4);
    CHECK(result.witness == VertexSet{3, 4, 5, 6});
}

TEST_CASE("alpha on the named small graphs") {
    CHECK(alpha(generate(FamilyKind::PATH, 5).first).value == 3);
    CHECK(alpha(generate(FamilyKind::BULL, 0).first).value == 3);
    CHECK(alpha(generate(FamilyKind::STAR, 5).first).value == 5);
    CHECK(alpha(generate(FamilyKind::PATH, 5).first).witness == VertexSet{0, 2, 4});
}

TEST_CASE("solver matches exhaustive enumeration") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 150; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        CHECK(alpha_e(g).value == oracles::exhaustive_alpha_e(g));
        CHECK(alpha(g).value == oracles::exhaustive_alpha(g));
    }
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : enumerate_free_trees(n)) {
            CHECK(alpha_e(t).value == oracles::exhaustive_alpha_e(t));
            CHECK(alpha(t).value == oracles::exhaustive_alpha(t));
        }
}

TEST_CASE("witness is the lexicographically least maximum set") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g(n, edges);
        auto sets = oracles::exhaustive_max_eis_sets(g);
        CHECK(alpha_e(g).witness == sets.front());
        CHECK(alpha_e_all_max(g).witnesses == sets);
    }
}

TEST_CASE("all maximum sets of the marked paths") {
    // P6: exactly {v0,v2,v5} and {v0,v3,v5}
    auto p6 = alpha_e_all_max(generate(FamilyKind::PATH, 6).first);
    CHECK(p6.value == 3);
    CHECK(p6.witnesses == std::vector<VertexSet>{{0, 2, 5}, {0, 3, 5}});

    // P8: unique {v0,v2,v5,v7}
    auto p8 = alpha_e_all_max(generate(FamilyKind::PATH, 8).first);
    CHECK(p8.value == 4);
    CHECK(p8.witnesses == std::vector<VertexSet>{{0, 2, 5, 7}});
}

TEST_CASE("full binary trees have the leaf set as unique maximum") {
    for (int n : {3, 7, 11, 15}) {
        for (const Graph& t : enumerate_full_binary(n)) {
            auto all = alpha_e_all_max(t);
            CHECK(all.value == (n + 1) / 2);
            REQUIRE(all.witnesses.size() == 1);
            VertexSet leaves;
            for (int v = 0; v < n; ++v)
                if (t.degree(v) == 1) leaves.push_back(v);
            CHECK(all.witnesses.front() == leaves);
        }
    }
}

TEST_CASE("solver results are reproducible") {
    Graph g = from_edge_list("9 10\n0 1\n0 2\n1 3\n2 4\n3 5\n4 5\n5 6\n6 7\n7 8\n2 8\n");
    auto a = alpha_e(g);
    auto b = alpha_e(g);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("node budget failure carries the best lower bound") {
    Graph g = generate(FamilyKind::PATH, 20).first;
    CHECK_THROWS_AS(alpha_e(g, 5), BudgetExceeded);
    try {
        alpha_e(g, 5);
    } catch (const BudgetExceeded& e) {
        CHECK(e.budget == 5);
        CHECK(e.best_lower_bound >= 1);
    }
}

TEST_CASE("every witness passes its checker") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g(n, edges);
        auto eis = alpha_e(g);
        CHECK(is_exponential_independent(g, eis.witness));
        CHECK(static_cast<int>(eis.witness.size()) == eis.value);
        CHECK(eis.value <= alpha(g).value);
    }
}
