#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mbd/vertex_set.hpp"

namespace mbd {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
// as one VertexSet per vertex; the edge list is stored sorted so that
// edge indices are stable (line graphs and serialization rely on this).
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on loops, out-of-range endpoints, or
    // n outside [0, VertexSet::kMaxVertices]. Duplicate edges collapse.
    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    VertexSet vertices() const { return VertexSet::first_n(n_); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(check(v))]; }
    VertexSet closed_neighborhood(int v) const {
        return adj_[static_cast<std::size_t>(check(v))] | VertexSet::single(v);
    }
    int degree(int v) const { return adj_[static_cast<std::size_t>(check(v))].count(); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

    // N(S) = union of open neighborhoods of members of S (may meet S).
    VertexSet neighborhood_of_set(VertexSet s) const;

    // Subgraph induced by keep, relabeled 0..|keep|-1 in ascending id
    // order; old_ids[i] (when requested) is the original id of vertex i.
    Graph induced(VertexSet keep, std::vector<int>* old_ids = nullptr) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int check(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<Edge> edges_;
};

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// Number of isolated vertices of G - X.
int isolated_after_removal(const Graph& g, VertexSet x);

// All automorphisms as image vectors, in lexicographic order of the image
// vector. Throws std::runtime_error if more than `limit` are found.
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit = 1u << 20);

}  // namespace mbd
