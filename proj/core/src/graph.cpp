#include "mbd/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbd {

int Graph::check(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return v;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n > VertexSet::kMaxVertices)
        throw std::invalid_argument("graph exceeds width limit of " +
                                    std::to_string(VertexSet::kMaxVertices) + " vertices");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        norm.emplace_back(u, v);
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    for (auto [u, v] : norm) {
        g.adj_[static_cast<std::size_t>(u)].add(v);
        g.adj_[static_cast<std::size_t>(v)].add(u);
    }
    g.edges_ = std::move(norm);
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::vector<Edge>(edges));
}

VertexSet Graph::neighborhood_of_set(VertexSet s) const {
    VertexSet out;
    for (int v : s) out |= neighbors(v);
    return out;
}

Graph Graph::induced(VertexSet keep, std::vector<int>* old_ids) const {
    std::vector<int> ids = keep.to_vector();
    std::vector<int> newid(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) newid[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (keep.contains(u) && keep.contains(v))
            es.emplace_back(newid[static_cast<std::size_t>(u)], newid[static_cast<std::size_t>(v)]);
    if (old_ids) *old_ids = ids;
    return from_edges(static_cast<int>(ids.size()), es);
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    VertexSet seen = VertexSet::single(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.vertices();
}

bool is_tree(const Graph& g) {
    return g.n() >= 1 && g.edge_count() == g.n() - 1 && is_connected(g);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        int start = left.first();
        VertexSet seen = VertexSet::single(start);
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            next -= seen;
            seen |= next;
            frontier = next;
        }
        comps.push_back(seen);
        left -= seen;
    }
    return comps;
}

int isolated_after_removal(const Graph& g, VertexSet x) {
    int count = 0;
    for (int v : g.vertices() - x)
        if (g.neighbors(v).subset_of(x)) ++count;
    return count;
}

namespace {

void automorphism_search(const Graph& g, std::vector<int>& image, VertexSet used,
                         std::vector<std::vector<int>>& out, std::size_t limit) {
    const int n = g.n();
    const int d = static_cast<int>(image.size());
    if (d == n) {
        if (out.size() >= limit) throw std::runtime_error("automorphism group too large");
        out.push_back(image);
        return;
    }
    for (int c = 0; c < n; ++c) {
        if (used.contains(c)) continue;
        if (g.degree(c) != g.degree(d)) continue;
        bool ok = true;
        for (int j = 0; j < d && ok; ++j)
            if (g.adjacent(d, j) != g.adjacent(c, image[static_cast<std::size_t>(j)])) ok = false;
        if (!ok) continue;
        image.push_back(c);
        automorphism_search(g, image, used | VertexSet::single(c), out, limit);
        image.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit) {
    std::vector<std::vector<int>> out;
    std::vector<int> image;
    automorphism_search(g, image, VertexSet{}, out, limit);
    return out;
}

}  // namespace mbd
