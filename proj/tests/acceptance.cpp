// Acceptance harness: one pass/fail line per criterion. Usage:
//   acceptance [criterion]   (1..12; no argument runs them all)
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "expind/families.hpp"
#include "expind/solver.hpp"
#include "expind/trees.hpp"
#include "expind/verify.hpp"
#include "expind/weights.hpp"
#include "oracles.hpp"

using namespace expind;

namespace {

struct Criterion {
    int number;
    const char* label;
    long long limit_ms;
    std::function<bool()> run;
};

bool verify_passes(const char* id, int max_n = 0) {
    RunConfig config;
    config.max_n = max_n;
    VerificationReport report = run_verify(id, config);
    for (const auto& f : report.failures)
        std::fprintf(stderr, "  %s: expected %s, got %s\n", id, f.expected.c_str(),
                     f.got.c_str());
    return report.passed;
}

bool oracle_equivalence() {
    // bundled relative distances against the definitional per-target BFS,
    // exhaustively on trees and on seeded random instances
    for (int n = 1; n <= 10; ++n)
        for (const Graph& t : enumerate_free_trees(n))
            for (int mask = 0; mask < (1 << n); ++mask) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if (mask & (1 << v)) s.push_back(v);
                for (int u = 0; u < n; ++u) {
                    auto bundled = all_dists_from(t, s, u);
                    for (size_t j = 0; j < s.size(); ++j)
                        if (bundled[j] != dist_rel(t, s, u, s[j])) return false;
                }
            }
    std::mt19937_64 rng(1009);
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g(n, edges);
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.push_back(v);
        int u = static_cast<int>(rng() % n);
        auto bundled = all_dists_from(g, s, u);
        for (size_t j = 0; j < s.size(); ++j)
            if (bundled[j] != dist_rel(g, s, u, s[j])) return false;
    }
    // solver against the exhaustive subset filter
    std::mt19937_64 rng2(2003);
    for (int i = 0; i < 300; ++i) {
        int n = 1 + static_cast<int>(rng2() % 7);
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (rng2() & 1) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (alpha_e(g).value != oracles::exhaustive_alpha_e(g)) return false;
    }
    return true;
}

bool micro_values() {
    Graph star = generate(FamilyKind::STAR, 6).first;
    VertexSet everyone = {0, 1, 2, 3, 4, 5, 6};
    if (weight_value(star, everyone, 1) != Dyadic(BigInt(2))) return false;
    VertexSet rest = {0, 2, 3, 4, 5, 6};
    if (weight_value(star, rest, 1) != Dyadic::one()) return false;
    VertexSet no_center = {2, 3, 4, 5, 6};
    if (weight_value(star, no_center, 1) != Dyadic(BigInt(5), 1)) return false;
    if (alpha_e(generate(FamilyKind::PATH, 5).first).value != 2) return false;
    if (alpha_e(generate(FamilyKind::BULL, 0).first).value != 2) return false;
    return true;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "paths alpha_e = ceil(2n/5), n <= 25", 10'000, [] { return verify_passes("thm3i"); }},
        {2, "cycles alpha_e = floor(2n/5), n <= 20", 30'000,
         [] { return verify_passes("thm3ii"); }},
        {3, "full binary trees: value and unique leaf witness, n <= 15", 60'000,
         [] { return verify_passes("thm3iii"); }},
        {4, "diameter lower bound with equality cases, trees n <= 12", 300'000,
         [] { return verify_passes("thm2"); }},
        {5, "(n+1)/2 upper bound with equality cases", 600'000,
         [] { return verify_passes("thm2b"); }},
        {6, "subcubic tree bound (2n+8)/13 and its construction, n <= 14", 300'000,
         [] { return verify_passes("thm4"); }},
        {7, "hereditary equality iff forbidden-subgraph-free, n <= 5", 120'000,
         [] { return verify_passes("thm5"); }},
        {8, "tree equality characterization and all-max witness sets", 600'000,
         [] { return verify_passes("thm6") && verify_passes("lem2"); }},
        {9, "alpha_e <= alpha and heredity on seeded random graphs", 120'000,
         [] { return verify_passes("thm1iii"); }},
        {10, "weight <= 2 at low-degree vertices of subcubic graphs, n <= 7", 300'000,
         [] { return verify_passes("lem1"); }},
        {11, "bundled distances and solver against exhaustive oracles", 300'000,
         oracle_equivalence},
        {12, "hand-checked weight and invariant values", 1'000, micro_values},
    };
    return all;
}

int run_one(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    bool ok = c.run();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool in_time = ms < c.limit_ms;
    std::printf("criterion %2d: %s (%lld ms, limit %lld) - %s\n", c.number,
                ok && in_time ? "pass" : "FAIL", static_cast<long long>(ms), c.limit_ms,
                c.label);
    std::fflush(stdout);
    return ok && in_time ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion 1..12]\n", argv[0]);
        return 2;
    }
    int failures = 0;
    if (argc == 2) {
        int wanted = std::atoi(argv[1]);
        for (const Criterion& c : criteria())
            if (c.number == wanted) return run_one(c);
        std::fprintf(stderr, "no such criterion: %s\n", argv[1]);
        return 2;
    }
    for (const Criterion& c : criteria()) failures += run_one(c);
    return failures == 0 ? 0 : 1;
}
