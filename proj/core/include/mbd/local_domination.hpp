#pragma once

#include "mbd/graph.hpp"

namespace mbd {

// Minimum number of vertices outside S that dominate
// N(S) union { v in S : deg(v) == ell }. Requires |S| == ell >= 1.
int local_domination_number_at(const Graph& g, VertexSet s, int ell);

// Maximum of the above over all ell-subsets S. Requires min_degree >= ell.
int local_domination_number(const Graph& g, int ell);

// Equivalent form for ell = 1: max over v of the minimum number of
// vertices dominating N(v) in G - v. Used as a cross-check.
int local_domination_number_leaf_form(const Graph& g);

// True iff g has no induced K_{1,k} (independent k-set inside a common
// neighborhood). k >= 2.
bool is_induced_star_free(const Graph& g, int k);

inline bool is_claw_free(const Graph& g) { return is_induced_star_free(g, 3); }

}  // namespace mbd
