#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

// Canonical families. Path and cycle vertices are numbered in traversal
// order; the star center is vertex 0.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite_graph(int p, int q);

// Cartesian product; vertex (x, y) gets id x * n(f) + y.
Graph cartesian_product(const Graph& g, const Graph& f);

// Grid P_m [] P_n; vertex (row, col) with 0-based row in [0, m) has id
// row * n + col.
Graph grid_graph(int m, int n);

// Line graph of h. Vertex i of the result is the i-th edge of h in
// lexicographic order; that edge list is returned alongside.
std::pair<Graph, std::vector<Edge>> line_graph(const Graph& h);

// Chain of `count` copies of K_k (count >= 2, k >= 3) linked in a path.
// Copy i occupies ids i*k .. i*k+k-1; the bridge joins vertex i*k+1 of
// copy i to vertex (i+1)*k of copy i+1, so every vertex gains at most one
// bridge edge; the result has maximum degree k and minimum degree k-1.
Graph clique_chain(int count, int k);

// C_{a+1} [] K_n (a >= 2, n >= 1); maximum degree n + 1.
Graph cycle_complete_product(int a, int n);

// Intended parameter regime is a >= n >= 5; smaller instances are valid
// graphs but fall outside that regime.
std::optional<std::string> cycle_complete_parameter_note(int a, int n);

// Odd path on 2k+1 vertices 0..2k plus the chords {2i-1, 2i+1} for
// i in [k-1]; claw-free for every k >= 1.
Graph chorded_odd_path(int k);

}  // namespace mbd
