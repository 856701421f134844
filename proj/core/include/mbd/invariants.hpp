#pragma once

#include <optional>

#include "mbd/graph.hpp"

namespace mbd {

int min_degree(const Graph& g);
int max_degree(const Graph& g);

// Exact classical invariants by exhaustive search with pruning.
int domination_number(const Graph& g);
int matching_number(const Graph& g);
int independence_number(const Graph& g);
int vertex_cover_number(const Graph& g);

// Lexicographically first minimum dominating set.
VertexSet minimum_dominating_set(const Graph& g);

// A maximum matching as an edge list (lexicographically first one found by
// the exact search).
std::vector<Edge> maximum_matching(const Graph& g);

// Smallest set D of vertices drawn from `candidates` with
// targets subseteq union of N[d]; lexicographically first at minimum size.
// Empty optional if even taking all candidates fails.
std::optional<VertexSet> minimum_dominating_subset(const Graph& g, VertexSet targets,
                                                   VertexSet candidates);

}  // namespace mbd
