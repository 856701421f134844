#include "mbd/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mbd {

namespace {

std::string ahu_encode(const Graph& g, int root, int parent) {
    std::vector<std::string> children;
    for (int u : g.neighbors(root))
        if (u != parent) children.push_back(ahu_encode(g, u, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ')';
    return out;
}

// Central vertices by iterated leaf removal.
std::vector<int> tree_centers(const Graph& g) {
    const int n = g.n();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[static_cast<std::size_t>(v)] = 1;
            --remaining;
            for (int u : g.neighbors(v))
                if (!removed[static_cast<std::size_t>(u)] && --deg[static_cast<std::size_t>(u)] == 1)
                    next.push_back(u);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
    if (!is_tree(tree)) throw std::invalid_argument("tree_canonical_form: not a tree");
    std::string best;
    for (int c : tree_centers(tree)) {
        std::string enc = ahu_encode(tree, c, -1);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

std::vector<Graph> enumerate_trees(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_trees supports 1 <= n <= 10");
    std::map<std::string, Graph> level;
    level.emplace("()", Graph::from_edges(1, {}));
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const auto& [key, t] : level) {
            (void)key;
            for (int attach = 0; attach < t.n(); ++attach) {
                std::vector<Edge> es = t.edges();
                es.emplace_back(attach, t.n());
                Graph grown = Graph::from_edges(t.n() + 1, es);
                next.emplace(tree_canonical_form(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [key, t] : level) {
        (void)key;
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

struct CanonSearch {
    const Graph* g;
    int n;
    int total_bits;
    std::uint64_t best;
    bool have_best;
    std::vector<int> image;

    // Appends vertex `cand` at position d and recurses; prefix holds the
    // first `bits` encoded bits, right-aligned.
    void rec(int d, std::uint64_t prefix, int bits, VertexSet used) {
        if (d == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used.contains(cand)) continue;
            std::uint64_t ext = prefix;
            for (int j = 0; j < d; ++j)
                ext = (ext << 1) | (g->adjacent(cand, image[static_cast<std::size_t>(j)]) ? 1u : 0u);
            int ext_bits = bits + d;
            if (have_best) {
                std::uint64_t best_prefix = best >> (total_bits - ext_bits);
                if (ext > best_prefix) continue;
            }
            image.push_back(cand);
            rec(d + 1, ext, ext_bits, used | VertexSet::single(cand));
            image.pop_back();
        }
    }
};

}  // namespace

std::uint64_t canonical_adjacency_code(const Graph& g) {
    const int n = g.n();
    if (n > 11) throw std::invalid_argument("canonical_adjacency_code supports n <= 11");
    if (n <= 1) return 0;
    CanonSearch s{&g, n, n * (n - 1) / 2, 0, false, {}};
    s.image.reserve(static_cast<std::size_t>(n));
    s.rec(0, 0, 0, VertexSet{});
    return s.best;
}

namespace {

Graph graph_from_code(int n, std::uint64_t code) {
    std::vector<Edge> es;
    int bit = n * (n - 1) / 2;
    for (int d = 1; d < n; ++d)
        for (int j = 0; j < d; ++j) {
            --bit;
            if ((code >> bit) & 1) es.emplace_back(j, d);
        }
    return Graph::from_edges(n, es);
}

}  // namespace

namespace {

std::vector<std::uint64_t> build_graph_codes(int n);

// The n-vertex codes derive from the (n-1)-vertex ones by one-vertex
// extension; cache each level so repeated census scans pay once per
// process.
const std::vector<std::uint64_t>& cached_graph_codes(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::uint64_t>> cache;
    std::unique_lock<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    lock.unlock();
    std::vector<std::uint64_t> codes = build_graph_codes(n);
    lock.lock();
    return cache.emplace(n, std::move(codes)).first->second;
}

std::vector<std::uint64_t> build_graph_codes(int n) {
    if (n <= 1) return {0};
    std::vector<std::uint64_t> next;
    for (std::uint64_t parent_code : cached_graph_codes(n - 1)) {
        Graph parent = graph_from_code(n - 1, parent_code);
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            std::vector<Edge> es = parent.edges();
            for (int v = 0; v < n - 1; ++v)
                if ((nb >> v) & 1) es.emplace_back(v, n - 1);
            next.push_back(canonical_adjacency_code(Graph::from_edges(n, es)));
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("enumerate_graphs supports 0 <= n <= 8");
    if (n == 0) return {};
    const auto& codes = cached_graph_codes(n);
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    std::vector<Graph> out;
    for (Graph& g : enumerate_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace mbd
