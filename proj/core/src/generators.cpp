#include "mbd/generators.hpp"

#include <stdexcept>

namespace mbd {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(n - 1, 0);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

Graph complete_bipartite_graph(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite needs p, q >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) es.emplace_back(i, p + j);
    return Graph::from_edges(p + q, es);
}

Graph cartesian_product(const Graph& g, const Graph& f) {
    if (g.n() < 1 || f.n() < 1) throw std::invalid_argument("product factors must be nontrivial");
    long long total = static_cast<long long>(g.n()) * f.n();
    if (total > VertexSet::kMaxVertices)
        throw std::invalid_argument("product exceeds width limit of " +
                                    std::to_string(VertexSet::kMaxVertices) + " vertices");
    const int nf = f.n();
    auto id = [nf](int x, int y) { return x * nf + y; };
    std::vector<Edge> es;
    for (int x = 0; x < g.n(); ++x)
        for (auto [y, y2] : f.edges()) es.emplace_back(id(x, y), id(x, y2));
    for (auto [x, x2] : g.edges())
        for (int y = 0; y < nf; ++y) es.emplace_back(id(x, y), id(x2, y));
    return Graph::from_edges(static_cast<int>(total), es);
}

Graph grid_graph(int m, int n) {
    return cartesian_product(path_graph(m), path_graph(n));
}

std::pair<Graph, std::vector<Edge>> line_graph(const Graph& h) {
    if (h.edge_count() < 1) throw std::invalid_argument("line graph needs at least one edge");
    const auto& edges = h.edges();
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return {Graph::from_edges(h.edge_count(), es), edges};
}

Graph clique_chain(int count, int k) {
    if (count < 2 || k < 3) throw std::invalid_argument("clique chain needs count >= 2, k >= 3");
    long long total = static_cast<long long>(count) * k;
    if (total > VertexSet::kMaxVertices)
        throw std::invalid_argument("clique chain exceeds width limit");
    std::vector<Edge> es;
    for (int c = 0; c < count; ++c) {
        int base = c * k;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) es.emplace_back(base + i, base + j);
        if (c + 1 < count) es.emplace_back(base + 1, base + k);
    }
    return Graph::from_edges(static_cast<int>(total), es);
}

Graph cycle_complete_product(int a, int n) {
    if (a < 2) throw std::invalid_argument("cycle factor needs a >= 2");
    if (n < 1) throw std::invalid_argument("complete factor needs n >= 1");
    return cartesian_product(cycle_graph(a + 1), complete_graph(n));
}

std::optional<std::string> cycle_complete_parameter_note(int a, int n) {
    if (a >= n && n >= 5) return std::nullopt;
    return "parameters outside the intended regime a >= n >= 5 (got a=" + std::to_string(a) +
           ", n=" + std::to_string(n) + "); instance is fine for plumbing tests only";
}

Graph chorded_odd_path(int k) {
    if (k < 1) throw std::invalid_argument("chorded odd path needs k >= 1");
    int n = 2 * k + 1;
    if (n > VertexSet::kMaxVertices) throw std::invalid_argument("chorded odd path exceeds width limit");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    for (int i = 1; i <= k - 1; ++i) es.emplace_back(2 * i - 1, 2 * i + 1);
    return Graph::from_edges(n, es);
}

}  // namespace mbd
