#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

// All non-isomorphic trees on n vertices (1 <= n <= 10), each exactly
// once, in a deterministic order. Built by leaf extension with
// canonical-form deduplication.
std::vector<Graph> enumerate_trees(int n);

// Canonical form of a free tree: the minimum AHU string over its one or
// two central vertices.
std::string tree_canonical_form(const Graph& tree);

// Minimum upper-triangle adjacency encoding over all vertex relabelings
// (row-major bit order, most significant bit first). Requires n <= 11.
std::uint64_t canonical_adjacency_code(const Graph& g);

// All non-isomorphic simple graphs on n vertices (0 <= n <= 8), each
// exactly once, in increasing canonical-code order. Built by one-vertex
// extension with canonical-code deduplication.
std::vector<Graph> enumerate_graphs(int n);

std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace mbd
