#pragma once

#include <memory>

#include "mbd/strategy.hpp"

namespace mbd {

// Dominator answers each Staller vertex with its partner under a fixed
// perfect matching ((1,1) games). With no matching given, a perfect
// matching is computed at start; absence is an applicability error. Any
// transversal of a perfect matching dominates the graph, so following the
// pairing wins.
std::unique_ptr<Strategy> make_pairing_dominator(std::vector<Edge> matching = {});

// Dominator keeps every vertex of N(S) (plus the bias-degree members of
// S) dominated right after each Staller move S, replaying the
// substitution rules for already-played vertices. Applicable to the
// Staller-start game with staller bias ell, dominator bias at least the
// ell-local domination number; in a Dominator-start game the opening move
// is vacuous.
std::unique_ptr<Strategy> make_local_domination_dominator(int ell);

// Dominator plays on the line graph of base using a fixed set of distinct
// t-representatives of the vertex-clique family: a Staller vertex that is
// a representative of clique Q draws a reply inside Q, anything else
// draws an adjacent reply. Applicable to the (k,k) Staller-start game on
// the line graph when min_degree(base) >= 2t and k <= 2t - 1.
std::unique_ptr<Strategy> make_sdr_line_graph_dominator(Graph base, int t, int k);

// Staller builds a pool of vertices with pairwise disjoint closed
// neighborhoods and floods them in stages, discarding any the Dominator
// touches; with bias k against dominator bias k-1 on a large enough
// graph, one neighborhood survives whole and she claims it. In the
// Dominator-start game the pool is chosen after his opening move; when
// max_degree < k she simply grabs an untouched closed neighborhood.
std::unique_ptr<Strategy> make_large_order_staller(int k);

// Scripted Staller for the (2,2) Staller-start game on the (4k+1) x n
// grid: she walks the first column claiming (4i-2,1),(4i,1), each move
// leaving two 2-vertex threats that consume Dominator's whole reply, and
// finishes on the far corner. Every turn starts with an immediate-win
// check, so a Dominator deviation is punished at once; the check can be
// disabled to compare script-only play.
std::unique_ptr<Strategy> make_grid_staller_22(int m, int n, bool immediate_win_preface = true);

// Scripted Staller for the (1,2) Dominator-start game on the m x n grid
// (m >= 3, n >= 2): picks a corner whose two neighbors his opening move
// left undominated, claims the corner pair, and wins off the forced
// replies; the two small-board cases with no such corner have their own
// two-move scripts.
std::unique_ptr<Strategy> make_grid_staller_12(int m, int n, bool immediate_win_preface = true);

// Staller on a tree with star partition width sigma >= 2, playing the
// (sigma-1, 1) Staller-start game: she takes the center of the terminal
// star on a maximal star-digraph path from a sigma-star, forcing
// Dominator to spend his whole move on its leaves, then recurses into the
// component that kept the sigma-star.
std::unique_ptr<Strategy> make_tree_staller();

// One-shot bounds. Staller claims a minimum-degree closed neighborhood
// (staller bias >= min_degree + 1, Staller starts); Dominator claims a
// minimum dominating set (dominator bias >= gamma, Dominator starts);
// Dominator answers each Staller move by taking all unplayed neighbors of
// her vertices (bias >= staller_bias * max_degree, staller_bias <=
// min_degree, Staller starts).
std::unique_ptr<Strategy> make_staller_min_degree();
std::unique_ptr<Strategy> make_dominator_dominating_set();
std::unique_ptr<Strategy> make_dominator_neighbor_responder();

// Dominator's two-move plan on a cycle-of-cliques product in the
// (a, n+1)-biased Dominator-start game: open with one vertex in each of a
// complete-graph layers, then finish the last layer. Out of reach for
// exhaustive adversaries at the intended sizes; validated by simulation.
std::unique_ptr<Strategy> make_layered_product_dominator(int a, int n);

// Deterministic but seeded random legal play, for simulation adversaries.
std::unique_ptr<Strategy> make_random_strategy(std::uint64_t seed);

// CLI-facing factory. Names: best_response, first_move, random[:seed],
// pairing, local_dominator:ell, sdr_line:t,k (requires base graph),
// large_order:k, grid22:m,n, grid12:m,n, tree, staller_min_degree,
// dominator_dominating_set, dominator_neighbor_responder,
// layered_product:a,n.
std::unique_ptr<Strategy> create_strategy(const std::string& spec, const Graph* base_graph = nullptr);

}  // namespace mbd
