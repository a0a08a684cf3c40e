#ifndef EXPIND_TREES_HPP
#define EXPIND_TREES_HPP

#include <string>
#include <vector>

#include "expind/graph.hpp"

namespace expind {

bool is_tree(const Graph& g);

// Centers of a tree (one or two), by iterative leaf pruning.
std::vector<int> tree_centers(const Graph& t);

// Canonical parenthesis code of the subtree rooted at root (children codes
// sorted). parent = -1 for the whole tree.
std::string rooted_canonical(const Graph& t, int root, int parent = -1);

// AHU canonical form of a free tree: root at the center, for bicentral
// trees take the lexicographically smaller of the two rooted codes.
// Throws if the input is not a tree.
std::string ahu_canonical(const Graph& t);

// One representative per isomorphism class of free trees on n vertices.
// 1 <= n <= 16.
std::vector<Graph> enumerate_free_trees(int n);

// All 2^(n choose 2) labeled graphs on n vertices, 1 <= n <= 6.
std::vector<Graph> enumerate_labeled_graphs(int n);

}  // namespace expind

#endif
