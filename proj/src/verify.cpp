#include "expind/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "expind/characterize.hpp"
#include "expind/families.hpp"
#include "expind/trees.hpp"
#include "expind/weights.hpp"

namespace expind {

namespace {

using Clock = std::chrono::steady_clock;

std::string set_to_string(const VertexSet& s) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << '}';
    return out.str();
}

std::string sets_to_string(const std::vector<VertexSet>& sets) {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < sets.size(); ++i) out << (i ? " " : "") << set_to_string(sets[i]);
    out << ']';
    return out.str();
}

void fail(VerificationReport& report, const Graph& g, std::string expected, std::string got) {
    report.failures.push_back({to_edge_list(g), std::move(expected), std::move(got)});
}

Graph random_graph(std::mt19937_64& rng, int max_n) {
    int n = 1 + static_cast<int>(rng() % max_n);
    int percent = 20 + 30 * static_cast<int>(rng() % 3);  // 20, 50 or 80
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexSet random_subset(std::mt19937_64& rng, const VertexSet& base) {
    VertexSet s;
    for (int v : base)
        if (rng() & 1) s.push_back(v);
    return s;
}

// All labeled graphs on n vertices with maximum degree at most 3,
// generated by recursive edge decisions with degree pruning.
template <typename Fn>
void for_each_subcubic_labeled(int n, const Fn& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == pairs.size()) {
            fn(Graph(n, edges));
            return;
        }
        self(self, i + 1);
        auto [u, v] = pairs[i];
        if (deg[u] < 3 && deg[v] < 3) {
            ++deg[u];
            ++deg[v];
            edges.push_back(pairs[i]);
            self(self, i + 1);
            edges.pop_back();
            --deg[u];
            --deg[v];
        }
    };
    rec(rec, 0);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

VertexSet leaf_set(const Graph& g) {
    VertexSet leaves;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    return leaves;
}

VertexSet roles(const FamilyDescriptor& d, const std::vector<std::string>& names) {
    VertexSet s;
    for (const auto& name : names) s.push_back(d.labeling.at(name));
    return normalized_set(std::move(s));
}

void verify_thm1iii(VerificationReport& report, const RunConfig& config, int max_n) {
    std::mt19937_64 rng(config.seed);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, max_n);
        ++report.instances_checked;
        auto eis = alpha_e(g, config.node_budget);
        auto ind = alpha(g, config.node_budget);
        if (eis.value > ind.value)
            fail(report, g, "alpha_e <= alpha",
                 std::to_string(eis.value) + " > " + std::to_string(ind.value));
        for (int j = 0; j < 500; ++j) {
            VertexSet sub = random_subset(rng, eis.witness);
            if (!is_exponential_independent(g, sub)) {
                fail(report, g, "subset " + set_to_string(sub) + " of EIS is EIS", "violation");
                break;
            }
        }
    }
}

void verify_thm2(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& t : enumerate_free_trees(n)) {
            ++report.instances_checked;
            int diam = diameter(t);
            int ae = alpha_e(t, config.node_budget).value;
            if (5 * ae < 2 * diam + 2)
                fail(report, t, "5*alpha_e >= 2*diam+2", std::to_string(ae));
            bool equality = 5 * ae == 2 * diam + 2;
            bool path_mult5 = t.max_degree() <= 2 && n % 5 == 0;
            if (equality != path_mult5)
                fail(report, t, "equality iff path with 5 | n",
                     std::string(equality ? "equality" : "strict") + " on " +
                         (path_mult5 ? "path-5k" : "other"));
            VertexSet s = theorem2_construction(t);
            if (!is_exponential_independent(t, s))
                fail(report, t, "construction is EIS", set_to_string(s));
            if (static_cast<int>(s.size()) < ceil_div(2 * diam + 2, 5))
                fail(report, t, "construction meets ceil((2*diam+2)/5)",
                     std::to_string(s.size()));
        }
    }
}

void verify_thm2b(VerificationReport& report, const RunConfig& config, int max_n) {
    auto check = [&](const Graph& g) {
        ++report.instances_checked;
        int ae = alpha_e(g, config.node_budget).value;
        if (2 * ae > g.n() + 1)
            fail(report, g, "2*alpha_e <= n+1", std::to_string(ae));
        bool equality = 2 * ae == g.n() + 1;
        bool fbt = is_full_binary(g);
        if (equality != fbt)
            fail(report, g, "equality iff full binary tree",
                 std::string(equality ? "equality" : "strict") + " on " +
                     (fbt ? "fbt" : "non-fbt"));
    };
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& t : enumerate_free_trees(n)) check(t);
    for (int n = 1; n <= std::min(max_n, 6); ++n)
        for (const Graph& g : enumerate_labeled_graphs(n))
            if (is_connected(g)) check(g);
}

void verify_thm3i(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        Graph p = generate(FamilyKind::PATH, n).first;
        ++report.instances_checked;
        int ae = alpha_e(p, config.node_budget).value;
        if (ae != ceil_div(2 * n, 5))
            fail(report, p, std::to_string(ceil_div(2 * n, 5)), std::to_string(ae));
    }
}

void verify_thm3ii(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 5; n <= max_n; ++n) {
        Graph c = generate(FamilyKind::CYCLE, n).first;
        ++report.instances_checked;
        int ae = alpha_e(c, config.node_budget).value;
        if (ae != 2 * n / 5)
            fail(report, c, std::to_string(2 * n / 5), std::to_string(ae));
    }
}

void verify_thm3iii(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 1; n <= max_n; n += 2) {
        for (const Graph& t : enumerate_full_binary(n)) {
            ++report.instances_checked;
            auto all = alpha_e_all_max(t, config.node_budget);
            if (2 * all.value != n + 1)
                fail(report, t, "alpha_e = (n+1)/2", std::to_string(all.value));
            VertexSet leaves = n == 1 ? VertexSet{0} : leaf_set(t);
            if (all.witnesses != std::vector<VertexSet>{leaves})
                fail(report, t, "unique witness " + set_to_string(leaves),
                     sets_to_string(all.witnesses));
        }
    }
}

void verify_thm4(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& t : enumerate_free_trees(n)) {
            if (t.max_degree() > 3) continue;
            ++report.instances_checked;
            int ae = alpha_e(t, config.node_budget).value;
            if (13 * ae < 2 * n + 8)
                fail(report, t, "13*alpha_e >= 2n+8", std::to_string(ae));
            if (n < 4) continue;
            VertexSet s = theorem4_construction(t);
            if (!is_exponential_independent(t, s))
                fail(report, t, "construction is EIS", set_to_string(s));
            if (static_cast<int>(s.size()) < ceil_div(2 * n + 8, 13))
                fail(report, t, "construction meets ceil((2n+8)/13)",
                     std::to_string(s.size()));
        }
    }
}

void verify_thm5(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& g : enumerate_labeled_graphs(n)) {
            ++report.instances_checked;
            bool hereditary = hereditary_equality(g);
            bool cpb_free = is_cpb_free(g);
            if (hereditary != cpb_free)
                fail(report, g, "hereditary equality iff {K13,P5,B}-free",
                     std::string(hereditary ? "hereditary" : "not-hereditary") + " vs " +
                         (cpb_free ? "free" : "not-free"));
        }
    }
    for (FamilyKind kind : {FamilyKind::STAR, FamilyKind::PATH, FamilyKind::BULL}) {
        Graph g = generate(kind, kind == FamilyKind::STAR ? 3 : 5).first;
        ++report.instances_checked;
        int ae = alpha_e(g, config.node_budget).value;
        int a = alpha(g, config.node_budget).value;
        if (ae != 2 || a != 3)
            fail(report, g, "alpha_e = 2 < 3 = alpha",
                 std::to_string(ae) + " / " + std::to_string(a));
    }
}

void verify_thm6(VerificationReport& report, const RunConfig& config, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& t : enumerate_free_trees(n)) {
            ++report.instances_checked;
            bool equality = alpha_e(t, config.node_budget).value ==
                            alpha(t, config.node_budget).value;
            bool member = t_membership(t).has_value();
            if (equality != member)
                fail(report, t, "alpha_e = alpha iff member of the tree family",
                     std::string(equality ? "equal" : "unequal") + " vs " +
                         (member ? "member" : "non-member"));
        }
    }
}

void verify_lem1(VerificationReport& report, const RunConfig& config, int max_n) {
    std::mt19937_64 rng(config.seed);
    for (int n = 1; n <= max_n; ++n) {
        for_each_subcubic_labeled(n, [&](const Graph& g) {
            ++report.instances_checked;
            for (int rep = 0; rep < 100; ++rep) {
                VertexSet s;
                for (int v = 0; v < n; ++v)
                    if (rng() & 1) s.push_back(v);
                for (int u = 0; u < n; ++u) {
                    if (g.degree(u) > 2) continue;
                    Dyadic w = weight_value(g, s, u);
                    if (w > Dyadic(BigInt(2))) {
                        fail(report, g,
                             "w <= 2 at degree<=2 vertex " + std::to_string(u) + " with S " +
                                 set_to_string(s),
                             w.to_string());
                        return;
                    }
                }
            }
        });
    }
}

void verify_lem2(VerificationReport& report, const RunConfig& config, int max_k) {
    auto check = [&](const Graph& t, int expected_value,
                     std::vector<VertexSet> expected_sets) {
        ++report.instances_checked;
        std::sort(expected_sets.begin(), expected_sets.end());
        expected_sets.erase(std::unique(expected_sets.begin(), expected_sets.end()),
                            expected_sets.end());
        auto all = alpha_e_all_max(t, config.node_budget);
        int a = alpha(t, config.node_budget).value;
        if (all.value != expected_value || a != expected_value)
            fail(report, t, "alpha_e = alpha = " + std::to_string(expected_value),
                 std::to_string(all.value) + " / " + std::to_string(a));
        if (all.witnesses != expected_sets)
            fail(report, t, sets_to_string(expected_sets), sets_to_string(all.witnesses));
    };
    auto ys = [](int k, int from = 1) {
        std::vector<std::string> names;
        for (int i = from; i <= k; ++i) names.push_back("y" + std::to_string(i));
        return names;
    };
    for (int k = 1; k <= max_k; ++k) {
        {
            auto [t, d] = generate(FamilyKind::T1, k);
            check(t, k,
                  {roles(d, ys(k)),
                   roles(d, [&] { auto v = ys(k, 2); v.push_back("x1"); return v; }()),
                   roles(d, [&] { auto v = ys(k - 1); v.push_back("x" + std::to_string(k)); return v; }())});
        }
        {
            auto [t, d] = generate(FamilyKind::T2, k);
            auto names = ys(k);
            names.push_back("a");
            check(t, k + 1, {roles(d, names)});
        }
        if (k >= 2) {
            auto [t, d] = generate(FamilyKind::T3, k);
            auto names = ys(k);
            names.push_back("b");
            names.push_back("d");
            check(t, k + 2, {roles(d, names)});
        }
        if (k >= 3) {
            auto [t, d] = generate(FamilyKind::T4, k);
            auto names = ys(k);
            names.push_back("b");
            check(t, k + 1, {roles(d, names)});
        }
        {
            auto [t, d] = generate(FamilyKind::T5, k);
            auto names = ys(k);
            for (const char* r : {"b", "d", "b'", "d'"}) names.push_back(r);
            check(t, k + 4, {roles(d, names)});
        }
    }
    {
        // P6 = T3(1) labeled y1 x1 a b c d
        auto [t, d] = generate(FamilyKind::T3, 1);
        check(t, 3, {roles(d, {"y1", "a", "d"}), roles(d, {"y1", "b", "d"})});
    }
    {
        // P8 = d c b a a' b' c' d'
        auto [t, d] = generate(FamilyKind::P8, 0);
        check(t, 4, {{d.labeling.at("v0"), d.labeling.at("v2"), d.labeling.at("v5"),
                         d.labeling.at("v7")}});
    }
}

}  // namespace

const std::vector<std::string>& known_theorem_ids() {
    static const std::vector<std::string> ids = {"thm1iii", "thm2",  "thm2b", "thm3i",
                                                 "thm3ii",  "thm3iii", "thm4", "thm5",
                                                 "thm6",    "lem1",  "lem2"};
    return ids;
}

VerificationReport run_verify(const std::string& theorem_id, const RunConfig& config) {
    VerificationReport report;
    report.theorem_id = theorem_id;
    auto start = Clock::now();
    auto pick = [&](int fallback) { return config.max_n > 0 ? config.max_n : fallback; };
    if (theorem_id == "thm1iii") {
        int max_n = pick(12);
        report.parameter_range = "200 seeded random graphs, n <= " + std::to_string(max_n);
        verify_thm1iii(report, config, max_n);
    } else if (theorem_id == "thm2") {
        int max_n = pick(12);
        report.parameter_range = "all free trees, n <= " + std::to_string(max_n);
        verify_thm2(report, config, max_n);
    } else if (theorem_id == "thm2b") {
        int max_n = pick(12);
        report.parameter_range = "all free trees n <= " + std::to_string(max_n) +
                                 " and labeled connected graphs n <= " +
                                 std::to_string(std::min(max_n, 6));
        verify_thm2b(report, config, max_n);
    } else if (theorem_id == "thm3i") {
        int max_n = pick(25);
        report.parameter_range = "paths P_n, n <= " + std::to_string(max_n);
        verify_thm3i(report, config, max_n);
    } else if (theorem_id == "thm3ii") {
        int max_n = pick(20);
        report.parameter_range = "cycles C_n, 5 <= n <= " + std::to_string(max_n);
        verify_thm3ii(report, config, max_n);
    } else if (theorem_id == "thm3iii") {
        int max_n = pick(15);
        report.parameter_range = "all full binary trees, n <= " + std::to_string(max_n);
        verify_thm3iii(report, config, max_n);
    } else if (theorem_id == "thm4") {
        int max_n = pick(14);
        report.parameter_range = "all subcubic free trees, n <= " + std::to_string(max_n);
        verify_thm4(report, config, max_n);
    } else if (theorem_id == "thm5") {
        int max_n = pick(5);
        report.parameter_range = "all labeled graphs, n <= " + std::to_string(max_n);
        verify_thm5(report, config, max_n);
    } else if (theorem_id == "thm6") {
        int max_n = pick(14);
        report.parameter_range = "all free trees, n <= " + std::to_string(max_n);
        verify_thm6(report, config, max_n);
    } else if (theorem_id == "lem1") {
        int max_n = pick(7);
        report.parameter_range = "all subcubic labeled graphs n <= " + std::to_string(max_n) +
                                 ", 100 seeded random S each";
        verify_lem1(report, config, max_n);
    } else if (theorem_id == "lem2") {
        int max_k = pick(6);
        report.parameter_range = "T1..T5 for k <= " + std::to_string(max_k) + ", plus P6 and P8";
        verify_lem2(report, config, max_k);
    } else {
        throw std::invalid_argument("unknown theorem id: " + theorem_id);
    }
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    report.passed = report.failures.empty() && report.instances_checked > 0;
    return report;
}

}  // namespace expind
