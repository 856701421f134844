#pragma once

#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

// Family of finite sets over integer-indexed ground elements.
using SetFamily = std::vector<std::vector<int>>;

struct SdrResult {
    bool exists = false;
    // exists: witness[i] lists the t representatives of set i, all
    // globally distinct.
    std::vector<std::vector<int>> witness;
    // !exists: indices of a subfamily whose union has fewer than
    // t * (subfamily size) elements.
    std::vector<int> violating_subfamily;
};

// Set of distinct t-representatives via bipartite matching with each set
// replicated t times; on failure the Hall violator is read off the final
// alternating-reachability structure.
SdrResult sdr_t_exists(const SetFamily& family, int t);

struct CliqueFamily {
    SetFamily sets;               // elements are edge indices of h, i.e. vertices of L(h)
    std::vector<int> vertex_of;   // sets[i] collects the edges at this vertex of h
};

// One set per non-isolated vertex of h, listing its incident edges in
// line-graph vertex numbering. Every edge appears in exactly two sets.
CliqueFamily clique_family(const Graph& h);

}  // namespace mbd
