#ifndef EXPIND_GRAPH_HPP
#define EXPIND_GRAPH_HPP

#include <limits>
#include <string>
#include <vector>

namespace expind {

// Distances are nonnegative ints; INF_DIST marks unreachable and compares
// greater than every finite distance.
using ExtendedDist = int;
constexpr ExtendedDist INF_DIST = std::numeric_limits<int>::max();

// Strictly increasing, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

bool is_sorted_unique(const VertexSet& s);
VertexSet normalized_set(std::vector<int> ids);
bool set_contains(const VertexSet& s, int v);

// Immutable simple undirected graph on vertices 0..n-1 with sorted
// adjacency lists.
class Graph {
public:
    Graph() = default;
    // edges may be in any order; validates range, loops and duplicates.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Edge-list format: first line "n m", then m lines "u v" with
// 0 <= u < v < n; '#' starts a comment. Throws std::runtime_error with a
// line number on malformed input.
Graph from_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Standard graph6 short form, n <= 62. Rejects malformed records and
// nonzero padding bits.
Graph parse_graph6(const std::string& line);
std::string encode_graph6(const Graph& g);

// Shortest-path lengths from source where every path avoids the vertices
// in forbidden (the source itself is exempt). Throws if source is
// forbidden.
std::vector<ExtendedDist> bfs_distances(const Graph& g, int source,
                                        const VertexSet& forbidden = {});

ExtendedDist diameter(const Graph& g);
bool is_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> index_map;  // new id -> original id
};

// Induced subgraph on a nonempty vertex set, relabeled 0..|W|-1 in order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

}  // namespace expind

#endif
