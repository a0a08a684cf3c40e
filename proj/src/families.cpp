#include "expind/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "expind/trees.hpp"

namespace expind {

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::PATH: return "path";
        case FamilyKind::CYCLE: return "cycle";
        case FamilyKind::STAR: return "star";
        case FamilyKind::FULL_BINARY: return "fbt";
        case FamilyKind::BULL: return "bull";
        case FamilyKind::T1: return "t1";
        case FamilyKind::T2: return "t2";
        case FamilyKind::T3: return "t3";
        case FamilyKind::T4: return "t4";
        case FamilyKind::T5: return "t5";
        case FamilyKind::P1: return "p1";
        case FamilyKind::P8: return "p8";
    }
    return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    for (FamilyKind kind : {FamilyKind::PATH, FamilyKind::CYCLE, FamilyKind::STAR,
                            FamilyKind::FULL_BINARY, FamilyKind::BULL, FamilyKind::T1,
                            FamilyKind::T2, FamilyKind::T3, FamilyKind::T4, FamilyKind::T5,
                            FamilyKind::P1, FamilyKind::P8})
        if (family_kind_name(kind) == name) return kind;
    return std::nullopt;
}

namespace {

// Comb: path x_1..x_k with a pendant y_i at each x_i. x_i -> i-1,
// y_i -> k+i-1.
std::pair<Graph, FamilyDescriptor> make_comb(int k) {
    if (k < 1) throw std::invalid_argument("t1: k must be >= 1");
    std::vector<std::pair<int, int>> edges;
    FamilyDescriptor d{FamilyKind::T1, k, {}};
    for (int i = 0; i < k; ++i) {
        if (i + 1 < k) edges.emplace_back(i, i + 1);
        edges.emplace_back(i, k + i);
        d.labeling["x" + std::to_string(i + 1)] = i;
        d.labeling["y" + std::to_string(i + 1)] = k + i;
    }
    return {Graph(2 * k, edges), d};
}

// Appends a pendant path off `anchor`, labeling its vertices with the
// given role names.
void attach_path(std::vector<std::pair<int, int>>& edges, FamilyDescriptor& d,
                 int anchor, int first_id, const std::vector<std::string>& roles) {
    int prev = anchor;
    for (size_t i = 0; i < roles.size(); ++i) {
        int id = first_id + static_cast<int>(i);
        edges.emplace_back(prev, id);
        d.labeling[roles[i]] = id;
        prev = id;
    }
}

std::pair<Graph, FamilyDescriptor> make_path(int n, FamilyKind kind) {
    if (n < 1) throw std::invalid_argument("path: order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    FamilyDescriptor d{kind, n, {}};
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) edges.emplace_back(i, i + 1);
        d.labeling["v" + std::to_string(i)] = i;
    }
    return {Graph(n, edges), d};
}

}  // namespace

std::pair<Graph, FamilyDescriptor> generate(FamilyKind kind, int k) {
    switch (kind) {
        case FamilyKind::P1:
            return make_path(1, FamilyKind::P1);
        case FamilyKind::P8:
            return make_path(8, FamilyKind::P8);
        case FamilyKind::PATH:
            return make_path(k, FamilyKind::PATH);
        case FamilyKind::CYCLE: {
            if (k < 3) throw std::invalid_argument("cycle: order must be >= 3");
            auto [g, d] = make_path(k, FamilyKind::CYCLE);
            auto edges = g.edges();
            edges.emplace_back(0, k - 1);
            return {Graph(k, edges), d};
        }
        case FamilyKind::STAR: {
            if (k < 1) throw std::invalid_argument("star: leaf count must be >= 1");
            std::vector<std::pair<int, int>> edges;
            FamilyDescriptor d{kind, k, {{"center", 0}}};
            for (int i = 1; i <= k; ++i) {
                edges.emplace_back(0, i);
                d.labeling["leaf" + std::to_string(i)] = i;
            }
            return {Graph(k + 1, edges), d};
        }
        case FamilyKind::FULL_BINARY: {
            // left-leaning shape with k leaves: internal spine 0..k-2,
            // leaves k-1..2k-2
            if (k < 1) throw std::invalid_argument("fbt: leaf count must be >= 1");
            if (k == 1) return {Graph(1, {}), FamilyDescriptor{kind, 1, {{"root", 0}}}};
            std::vector<std::pair<int, int>> edges;
            FamilyDescriptor d{kind, k, {{"root", 0}}};
            for (int i = 0; i < k - 2; ++i) edges.emplace_back(i, i + 1);
            for (int i = 0; i < k - 1; ++i) edges.emplace_back(i, k - 1 + i);
            edges.emplace_back(k - 2, 2 * k - 2);
            return {Graph(2 * k - 1, edges), d};
        }
        case FamilyKind::BULL: {
            FamilyDescriptor d{kind, 0,
                               {{"u1", 0}, {"u2", 1}, {"w", 2}, {"h1", 3}, {"h2", 4}}};
            return {Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}), d};
        }
        case FamilyKind::T1:
            return make_comb(k);
        case FamilyKind::T2: {
            auto [g, d] = make_comb(k);
            d.kind = FamilyKind::T2;
            auto edges = g.edges();
            attach_path(edges, d, /*x1=*/0, 2 * k, {"a"});
            return {Graph(2 * k + 1, edges), d};
        }
        case FamilyKind::T3: {
            auto [g, d] = make_comb(k);
            d.kind = FamilyKind::T3;
            auto edges = g.edges();
            attach_path(edges, d, /*x1=*/0, 2 * k, {"a", "b", "c", "d"});
            return {Graph(2 * k + 4, edges), d};
        }
        case FamilyKind::T4: {
            if (k < 3) throw std::invalid_argument("t4: k must be >= 3");
            auto [g, d] = make_comb(k);
            d.kind = FamilyKind::T4;
            auto edges = g.edges();
            attach_path(edges, d, /*x2=*/1, 2 * k, {"a", "b"});
            return {Graph(2 * k + 2, edges), d};
        }
        case FamilyKind::T5: {
            auto [g, d] = make_comb(k);
            d.kind = FamilyKind::T5;
            auto edges = g.edges();
            attach_path(edges, d, /*x1=*/0, 2 * k, {"a", "b", "c", "d"});
            attach_path(edges, d, /*xk=*/k - 1, 2 * k + 4, {"a'", "b'", "c'", "d'"});
            return {Graph(2 * k + 8, edges), d};
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

std::vector<Graph> enumerate_full_binary(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("enumerate_full_binary: order must be odd and positive");
    int leaves = (n + 1) / 2;
    // rooted shapes by leaf count, root is always vertex 0
    std::vector<std::vector<Graph>> rooted(leaves + 1);
    rooted[1] = {Graph(1, {})};
    for (int l = 2; l <= leaves; ++l) {
        for (int ll = 1; ll < l; ++ll) {
            for (const Graph& left : rooted[ll]) {
                for (const Graph& right : rooted[l - ll]) {
                    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 1 + left.n()}};
                    for (auto [u, v] : left.edges()) edges.emplace_back(u + 1, v + 1);
                    for (auto [u, v] : right.edges())
                        edges.emplace_back(u + 1 + left.n(), v + 1 + left.n());
                    rooted[l].emplace_back(1 + left.n() + right.n(), edges);
                }
            }
        }
    }
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (const Graph& t : rooted[leaves])
        if (seen.insert(ahu_canonical(t)).second) out.push_back(t);
    return out;
}

bool is_full_binary(const Graph& g, int* root) {
    if (!is_tree(g)) return false;
    if (g.n() == 1) {
        if (root) *root = 0;
        return true;
    }
    if (g.n() % 2 == 0) return false;
    // n >= 3: exactly one vertex of degree 2 (the root), the rest of
    // degree 1 or 3
    int deg2 = -1;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 2) {
            if (deg2 >= 0) return false;
            deg2 = v;
        } else if (d != 1 && d != 3) {
            return false;
        }
    }
    if (deg2 < 0) return false;
    if (root) *root = deg2;
    return true;
}

std::optional<FamilyDescriptor> t_membership(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("t_membership: input is not a tree");
    int n = t.n();
    std::string code = ahu_canonical(t);
    std::vector<std::pair<FamilyKind, int>> candidates;
    if (n == 1) candidates.emplace_back(FamilyKind::P1, 1);
    if (n == 8) candidates.emplace_back(FamilyKind::P8, 8);
    if (n % 2 == 0 && n >= 2) candidates.emplace_back(FamilyKind::T1, n / 2);
    if (n % 2 == 1 && n >= 3) candidates.emplace_back(FamilyKind::T2, (n - 1) / 2);
    if (n % 2 == 0 && n >= 6) candidates.emplace_back(FamilyKind::T3, (n - 4) / 2);
    if (n % 2 == 0 && n >= 8) candidates.emplace_back(FamilyKind::T4, (n - 2) / 2);
    if (n % 2 == 0 && n >= 10) candidates.emplace_back(FamilyKind::T5, (n - 8) / 2);
    for (auto [kind, k] : candidates) {
        auto [member, descriptor] = generate(kind, kind == FamilyKind::P1 || kind == FamilyKind::P8 ? 0 : k);
        if (ahu_canonical(member) == code) return descriptor;
    }
    return std::nullopt;
}

namespace {

// Positions congruent to 0 or 2 mod 5 along an ordered path.
VertexSet mod5_positions(const std::vector<int>& path) {
    VertexSet s;
    for (size_t j = 0; j < path.size(); ++j)
        if (j % 5 == 0 || j % 5 == 2) s.push_back(path[j]);
    return normalized_set(std::move(s));
}

}  // namespace

VertexSet theorem2_construction(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("theorem2_construction: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("theorem2_construction: disconnected graph");
    // lexicographically least diametral pair, then the least shortest path
    int diam = diameter(g);
    int source = -1, target = -1;
    for (int v = 0; v < g.n() && source < 0; ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 0; u < g.n(); ++u) {
            if (dist[u] == diam) {
                source = v;
                target = u;
                break;
            }
        }
    }
    auto to_target = bfs_distances(g, target);
    std::vector<int> path = {source};
    int cur = source;
    while (cur != target) {
        for (int w : g.neighbors(cur)) {
            if (to_target[w] == to_target[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return mod5_positions(path);
}

VertexSet theorem4_construction(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("theorem4_construction: input is not a tree");
    if (t.max_degree() > 3) throw std::invalid_argument("theorem4_construction: maximum degree > 3");
    if (t.n() <= 3) throw std::invalid_argument("theorem4_construction: order must be >= 4");

    // S1: all leaves; all but the lexicographically greatest leaf when
    // there is no degree-2 vertex
    VertexSet leaves;
    int n2 = 0;
    for (int v = 0; v < t.n(); ++v) {
        if (t.degree(v) == 1) leaves.push_back(v);
        if (t.degree(v) == 2) ++n2;
    }
    VertexSet s1 = leaves;
    if (n2 == 0) s1.pop_back();

    // S2: the mod-5 pattern on each path component of T - N[V3]
    std::vector<bool> removed(t.n(), false);
    for (int v = 0; v < t.n(); ++v) {
        if (t.degree(v) == 3) {
            removed[v] = true;
            for (int u : t.neighbors(v)) removed[u] = true;
        }
    }
    VertexSet s2;
    std::vector<bool> visited(t.n(), false);
    for (int start = 0; start < t.n(); ++start) {
        if (removed[start] || visited[start]) continue;
        // collect the component (a path), then walk it from its least
        // endpoint
        std::vector<int> component = {start};
        visited[start] = true;
        for (size_t i = 0; i < component.size(); ++i)
            for (int u : t.neighbors(component[i]))
                if (!removed[u] && !visited[u]) {
                    visited[u] = true;
                    component.push_back(u);
                }
        auto comp_degree = [&](int v) {
            int d = 0;
            for (int u : t.neighbors(v))
                if (!removed[u]) ++d;
            return d;
        };
        int endpoint = t.n();
        for (int v : component)
            if (comp_degree(v) <= 1) endpoint = std::min(endpoint, v);
        std::vector<int> ordered = {endpoint};
        int prev = -1, cur = endpoint;
        while (true) {
            int next = -1;
            for (int u : t.neighbors(cur))
                if (!removed[u] && u != prev) next = u;
            if (next < 0) break;
            ordered.push_back(next);
            prev = cur;
            cur = next;
        }
        for (int v : mod5_positions(ordered)) s2.push_back(v);
    }
    s2 = normalized_set(std::move(s2));
    return s2.size() > s1.size() ? s2 : s1;
}

}  // namespace expind
