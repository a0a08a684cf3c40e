#include "expind/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace expind {

bool is_sorted_unique(const VertexSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

VertexSet normalized_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::runtime_error("edge endpoint out of range");
        if (u == v) throw std::runtime_error("self-loop");
        if (!seen.insert({u, v}).second) throw std::runtime_error("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = static_cast<int>(seen.size());
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("edge list, line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::istringstream probe(line);
                std::string tok;
                if (probe >> tok) fail("expected header \"n m\"");
                n = -1;  // blank line before header
                continue;
            }
            if (n < 0 || m < 0) fail("negative header value");
            std::string extra;
            if (ls >> extra) fail("trailing tokens after header");
            continue;
        }
        int u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) fail("expected \"u v\"");
        std::string extra;
        if (ls >> extra) fail("trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
        if (u == v) fail("self-loop");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::runtime_error("edge list: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw std::runtime_error("edge list: header promises " + std::to_string(m) +
                                 " edges, found " + std::to_string(edges.size()));
    try {
        return Graph(n, edges);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw std::runtime_error("graph6: empty record");
    int n = line[0] - 63;
    if (n < 0 || n > 62) throw std::runtime_error("graph6: bad length byte (short form, n <= 62)");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw std::runtime_error("graph6: record length mismatch");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = line[1 + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw std::runtime_error("graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // padding bits must be zero
    for (int b = nbits; b < 6 * nbytes; ++b) {
        int byte = line[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw std::runtime_error("graph6: nonzero padding bit");
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::runtime_error("graph6 encode: n > 62");
    std::string out(1, static_cast<char>(63 + n));
    int bit = 0, cur = 0;
    auto push = [&](int b) {
        cur = (cur << 1) | b;
        if (++bit == 6) {
            out += static_cast<char>(63 + cur);
            bit = 0;
            cur = 0;
        }
    };
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) push(g.has_edge(row, col) ? 1 : 0);
    if (bit > 0) out += static_cast<char>(63 + (cur << (6 - bit)));
    return out;
}

std::vector<ExtendedDist> bfs_distances(const Graph& g, int source,
                                        const VertexSet& forbidden) {
    if (set_contains(forbidden, source))
        throw std::invalid_argument("bfs_distances: source is forbidden");
    std::vector<ExtendedDist> dist(g.n(), INF_DIST);
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u)) {
            if (dist[v] != INF_DIST || set_contains(forbidden, v)) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

ExtendedDist diameter(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("diameter: empty graph");
    ExtendedDist diam = 0;
    for (int s = 0; s < g.n(); ++s) {
        for (ExtendedDist d : bfs_distances(g, s)) {
            if (d == INF_DIST) return INF_DIST;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](ExtendedDist d) { return d == INF_DIST; });
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    if (w.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if (!is_sorted_unique(w) || w.front() < 0 || w.back() >= g.n())
        throw std::invalid_argument("induced_subgraph: bad vertex set");
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < w.size(); ++i)
        for (int v : g.neighbors(w[i]))
            if (pos[v] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), pos[v]);
    return {Graph(static_cast<int>(w.size()), edges), w};
}

}  // namespace expind
