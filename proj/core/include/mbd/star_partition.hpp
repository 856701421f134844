#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbd/graph.hpp"
#include "mbd/thresholds.hpp"

namespace mbd {

struct Star {
    int center = -1;
    VertexSet leaves;

    int size() const { return leaves.count() + 1; }
    VertexSet block() const { return leaves | VertexSet::single(center); }
};

// Partition of V into stars with designated centers; every block has at
// least two vertices and every leaf is adjacent to its center.
struct StarPartition {
    std::vector<Star> stars;

    // profile()[i] counts the i-stars (i leaves), for i = 1..max_degree;
    // index 0 is unused.
    std::vector<int> profile(const Graph& g) const;
    int largest_star_leaves() const;
    std::string to_json() const;
};

// Throws std::invalid_argument when p is not a valid star partition of g.
void validate_star_partition(const Graph& g, const StarPartition& p);

// Exact decision by depth-first search over center/leaf assignments in
// degeneracy order with capacity k per center; returns a witness when one
// exists.
std::pair<bool, std::optional<StarPartition>> has_k_star_partition(const Graph& g, int k);

// sigma(g): smallest k admitting a k-star partition; infinite iff g has an
// isolated vertex or fewer than two vertices.
ThresholdValue star_partition_width(const Graph& g);

// Partition whose profile (s_Delta, ..., s_1) is lexicographically
// smallest; ties broken by the smallest (center, leaves) encoding, so the
// result is deterministic. Throws on isolated vertices or n < 2.
StarPartition lex_optimal_star_partition(const Graph& g);

// Star partition with exactly matching_number(g) blocks, built from a
// maximum matching by the center-selection cases and attaching every
// unsaturated vertex to an adjacent center.
StarPartition star_partition_from_matching(const Graph& g);

struct StarDigraph {
    int star_count = 0;
    std::vector<std::pair<int, int>> arcs;  // i -> j: a leaf of star i touches center of star j

    bool has_arc(int i, int j) const;
    std::vector<int> out_neighbors(int i) const;
    std::string to_json() const;
};

StarDigraph star_digraph(const Graph& g, const StarPartition& p);

struct LemmaCheckReport {
    bool leaf_leaf_ok = true;       // leaf-leaf edges only in the allowed small cases
    bool leaf_center_ok = true;     // leaf of S_i next to center of S_j => |S_i| <= |S_j| + 1
    bool path_terminal_ok = true;   // stars reachable from a sigma-star have size >= sigma
    std::string counterexample;

    bool all_ok() const { return leaf_leaf_ok && leaf_center_ok && path_terminal_ok; }
};

// Structural properties of lexicographically optimal partitions; intended
// for partitions produced by lex_optimal_star_partition, and usable as a
// negative control on perturbed ones.
LemmaCheckReport check_lex_optimal_lemma(const Graph& g, const StarPartition& p);

struct SigmaFormulaReport {
    bool applicable = false;  // requires min degree >= 1 and no 2-star partition
    bool match = false;
    int sigma = 0;
    int formula = 0;  // max over proper nonempty S of ceil(i(G-S)/|S|)
};

SigmaFormulaReport sigma_formula_check(const Graph& g);

}  // namespace mbd
