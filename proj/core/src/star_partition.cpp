#include "mbd/star_partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "mbd/invariants.hpp"

namespace mbd {

std::vector<int> StarPartition::profile(const Graph& g) const {
    std::vector<int> prof(static_cast<std::size_t>(std::max(1, max_degree(g)) + 1), 0);
    for (const auto& s : stars) ++prof[static_cast<std::size_t>(s.leaves.count())];
    return prof;
}

int StarPartition::largest_star_leaves() const {
    int best = 0;
    for (const auto& s : stars) best = std::max(best, s.leaves.count());
    return best;
}

std::string StarPartition::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < stars.size(); ++i) {
        if (i) out += ',';
        out += "{\"center\":" + std::to_string(stars[i].center) + ",\"leaves\":[";
        bool fst = true;
        for (int v : stars[i].leaves) {
            if (!fst) out += ',';
            out += std::to_string(v);
            fst = false;
        }
        out += "]}";
    }
    out += ']';
    return out;
}

void validate_star_partition(const Graph& g, const StarPartition& p) {
    VertexSet seen;
    for (const auto& s : p.stars) {
        if (s.center < 0 || s.center >= g.n()) throw std::invalid_argument("star center out of range");
        if (s.leaves.empty()) throw std::invalid_argument("star block smaller than two vertices");
        VertexSet block = s.block();
        if (block.count() != s.leaves.count() + 1)
            throw std::invalid_argument("star center listed among its leaves");
        if (seen.intersects(block)) throw std::invalid_argument("star blocks overlap");
        seen |= block;
        for (int u : s.leaves)
            if (!g.adjacent(u, s.center))
                throw std::invalid_argument("leaf " + std::to_string(u) + " not adjacent to its center " +
                                            std::to_string(s.center));
    }
    if (seen != g.vertices()) throw std::invalid_argument("star blocks do not cover every vertex");
}

namespace {

std::vector<int> degeneracy_order(const Graph& g) {
    std::vector<int> order;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        int best = -1, bestdeg = VertexSet::kMaxVertices + 1;
        for (int v : left) {
            int d = (g.neighbors(v) & left).count();
            if (d < bestdeg) {
                bestdeg = d;
                best = v;
            }
        }
        order.push_back(best);
        left.remove(best);
    }
    return order;
}

// Enumerates every star partition of g with star capacity max_leaves,
// processing vertices in the given order. Each (blocks, centers)
// configuration is produced exactly once. The callback returning true
// aborts the enumeration.
struct PartitionEnumerator {
    const Graph* g;
    int max_leaves;
    std::vector<int> order;
    std::vector<int> owner;              // leaf -> its center, or -1
    std::vector<int> leaf_count;         // per center
    std::vector<char> is_center;         // confirmed or future center
    VertexSet processed;

    bool run(const std::function<bool(const StarPartition&)>& cb) {
        return step(0, cb);
    }

    StarPartition snapshot() const {
        StarPartition p;
        for (int v = 0; v < g->n(); ++v) {
            if (!is_center[static_cast<std::size_t>(v)]) continue;
            Star s;
            s.center = v;
            for (int u = 0; u < g->n(); ++u)
                if (owner[static_cast<std::size_t>(u)] == v) s.leaves.add(u);
            p.stars.push_back(s);
        }
        return p;
    }

    bool step(int i, const std::function<bool(const StarPartition&)>& cb) {
        if (i == g->n()) {
            for (int v = 0; v < g->n(); ++v)
                if (is_center[static_cast<std::size_t>(v)] && leaf_count[static_cast<std::size_t>(v)] == 0)
                    return false;
            return cb(snapshot());
        }
        const int v = order[static_cast<std::size_t>(i)];
        processed.add(v);
        bool stop = false;

        if (is_center[static_cast<std::size_t>(v)]) {
            // Promoted earlier by one of its leaves; nothing to decide.
            stop = step(i + 1, cb);
        } else {
            // Become a leaf of some adjacent (confirmed or future) center.
            for (int u : g->neighbors(v)) {
                if (stop) break;
                bool u_center = is_center[static_cast<std::size_t>(u)];
                if (processed.contains(u) && !u_center) continue;  // u is a leaf
                if (leaf_count[static_cast<std::size_t>(u)] >= max_leaves) continue;
                bool promoted = false;
                if (!u_center) {
                    is_center[static_cast<std::size_t>(u)] = 1;
                    promoted = true;
                }
                owner[static_cast<std::size_t>(v)] = u;
                ++leaf_count[static_cast<std::size_t>(u)];
                stop = step(i + 1, cb);
                --leaf_count[static_cast<std::size_t>(u)];
                owner[static_cast<std::size_t>(v)] = -1;
                if (promoted) is_center[static_cast<std::size_t>(u)] = 0;
            }
            // Or become a center whose leaves arrive later.
            if (!stop && !(g->neighbors(v) - processed).empty()) {
                is_center[static_cast<std::size_t>(v)] = 1;
                stop = step(i + 1, cb);
                is_center[static_cast<std::size_t>(v)] = 0;
            }
        }
        processed.remove(v);
        return stop;
    }
};

PartitionEnumerator make_enumerator(const Graph& g, int max_leaves) {
    PartitionEnumerator e;
    e.g = &g;
    e.max_leaves = max_leaves;
    e.order = degeneracy_order(g);
    e.owner.assign(static_cast<std::size_t>(g.n()), -1);
    e.leaf_count.assign(static_cast<std::size_t>(g.n()), 0);
    e.is_center.assign(static_cast<std::size_t>(g.n()), 0);
    e.processed = VertexSet{};
    return e;
}

std::vector<int> partition_encoding(const StarPartition& p) {
    std::vector<std::vector<int>> blocks;
    for (const auto& s : p.stars) {
        std::vector<int> b{s.center};
        for (int v : s.leaves) b.push_back(v);
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> flat;
    for (const auto& b : blocks) {
        flat.push_back(static_cast<int>(b.size()));
        flat.insert(flat.end(), b.begin(), b.end());
    }
    return flat;
}

// profile comparison from s_Delta down to s_1; smaller wins.
bool profile_less(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = std::max(a.size(), b.size()); i-- > 1;) {
        int av = i < a.size() ? a[i] : 0;
        int bv = i < b.size() ? b[i] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

}  // namespace

std::pair<bool, std::optional<StarPartition>> has_k_star_partition(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (g.n() < 2) return {false, std::nullopt};
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return {false, std::nullopt};
    auto e = make_enumerator(g, k);
    std::optional<StarPartition> witness;
    bool found = e.run([&](const StarPartition& p) {
        witness = p;
        return true;
    });
    return {found, witness};
}

ThresholdValue star_partition_width(const Graph& g) {
    if (g.n() < 2) return ThresholdValue::infinite();
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return ThresholdValue::infinite();
    for (int k = 1; k <= max_degree(g); ++k)
        if (has_k_star_partition(g, k).first) return ThresholdValue::finite(k);
    throw std::logic_error("no star partition found despite min degree >= 1");
}

StarPartition lex_optimal_star_partition(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("nontrivial graph required");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex present");

    auto e = make_enumerator(g, max_degree(g));
    std::optional<StarPartition> best;
    std::vector<int> best_profile;
    std::vector<int> best_encoding;
    e.run([&](const StarPartition& p) {
        std::vector<int> prof = p.profile(g);
        std::vector<int> enc = partition_encoding(p);
        if (!best || profile_less(prof, best_profile) ||
            (!profile_less(best_profile, prof) && enc < best_encoding)) {
            best = p;
            best_profile = std::move(prof);
            best_encoding = std::move(enc);
        }
        return false;
    });
    if (!best) throw std::logic_error("no star partition found despite min degree >= 1");
    return *best;
}

StarPartition star_partition_from_matching(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("nontrivial graph required");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex present");

    std::vector<Edge> matching = maximum_matching(g);
    VertexSet saturated;
    for (auto [x, y] : matching) {
        saturated.add(x);
        saturated.add(y);
    }
    VertexSet unsaturated = g.vertices() - saturated;

    StarPartition p;
    for (auto [x, y] : matching) {
        VertexSet ux = g.neighbors(x) & unsaturated;
        VertexSet uy = g.neighbors(y) & unsaturated;
        int center;
        if (!ux.empty() && !uy.empty()) {
            // Maximality forces a single common unsaturated neighbor;
            // either endpoint may serve as the center.
            if (!(ux == uy && ux.count() == 1))
                throw std::logic_error("matching not maximum: augmenting path via unsaturated neighbors");
            center = x;
        } else if (!ux.empty()) {
            center = x;
        } else if (!uy.empty()) {
            center = y;
        } else {
            center = x;
        }
        Star s;
        s.center = center;
        s.leaves.add(center == x ? y : x);
        p.stars.push_back(s);
    }
    for (int v : unsaturated) {
        bool attached = false;
        for (auto& s : p.stars) {
            if (g.adjacent(v, s.center)) {
                s.leaves.add(v);
                attached = true;
                break;
            }
        }
        if (!attached) throw std::logic_error("unsaturated vertex has no adjacent center");
    }
    validate_star_partition(g, p);
    return p;
}

bool StarDigraph::has_arc(int i, int j) const {
    return std::find(arcs.begin(), arcs.end(), std::make_pair(i, j)) != arcs.end();
}

std::vector<int> StarDigraph::out_neighbors(int i) const {
    std::vector<int> out;
    for (auto [a, b] : arcs)
        if (a == i) out.push_back(b);
    return out;
}

std::string StarDigraph::to_json() const {
    std::string out = "{\"stars\":" + std::to_string(star_count) + ",\"arcs\":[";
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (i) out += ',';
        out += "[" + std::to_string(arcs[i].first) + "," + std::to_string(arcs[i].second) + "]";
    }
    out += "]}";
    return out;
}

StarDigraph star_digraph(const Graph& g, const StarPartition& p) {
    validate_star_partition(g, p);
    StarDigraph d;
    d.star_count = static_cast<int>(p.stars.size());
    for (int i = 0; i < d.star_count; ++i)
        for (int j = 0; j < d.star_count; ++j) {
            if (i == j) continue;
            bool arc = false;
            for (int u : p.stars[static_cast<std::size_t>(i)].leaves)
                if (g.adjacent(u, p.stars[static_cast<std::size_t>(j)].center)) arc = true;
            if (arc) d.arcs.emplace_back(i, j);
        }
    return d;
}

LemmaCheckReport check_lex_optimal_lemma(const Graph& g, const StarPartition& p) {
    validate_star_partition(g, p);
    LemmaCheckReport rep;
    const int m = static_cast<int>(p.stars.size());

    std::vector<int> star_of(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < m; ++i)
        for (int v : p.stars[static_cast<std::size_t>(i)].block()) star_of[static_cast<std::size_t>(v)] = i;

    // (i) leaf-leaf edges only inside a 2-leaf star or across blocks with
    // |S_i| + |S_j| <= 5.
    for (int i = 0; i < m && rep.leaf_leaf_ok; ++i)
        for (int x : p.stars[static_cast<std::size_t>(i)].leaves) {
            for (int y = 0; y < g.n(); ++y) {
                if (!g.adjacent(x, y)) continue;
                int j = star_of[static_cast<std::size_t>(y)];
                if (j < 0 || y == p.stars[static_cast<std::size_t>(j)].center) continue;  // y is a center
                if (x >= y) continue;
                if (i == static_cast<int>(j)) {
                    if (p.stars[static_cast<std::size_t>(i)].leaves.count() == 2) continue;  // special case (1)
                } else {
                    if (p.stars[static_cast<std::size_t>(i)].size() +
                            p.stars[static_cast<std::size_t>(j)].size() <=
                        5)
                        continue;  // special case (2)
                }
                rep.leaf_leaf_ok = false;
                rep.counterexample = "leaf-leaf edge {" + std::to_string(x) + "," + std::to_string(y) + "}";
                break;
            }
            if (!rep.leaf_leaf_ok) break;
        }

    // (ii) leaf of S_i adjacent to center of S_j forces |S_i| <= |S_j| + 1.
    for (int i = 0; i < m && rep.leaf_center_ok; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto& si = p.stars[static_cast<std::size_t>(i)];
            const auto& sj = p.stars[static_cast<std::size_t>(j)];
            bool touches = false;
            for (int x : si.leaves)
                if (g.adjacent(x, sj.center)) touches = true;
            if (touches && si.size() > sj.size() + 1) {
                rep.leaf_center_ok = false;
                rep.counterexample = "leaf of star " + std::to_string(i) + " (size " +
                                     std::to_string(si.size()) + ") adjacent to center of star " +
                                     std::to_string(j) + " (size " + std::to_string(sj.size()) + ")";
                break;
            }
        }

    // (iii) every star reachable in the star digraph from a sigma-star has
    // size >= sigma (prefixes of directed paths are paths).
    int sigma = p.largest_star_leaves();
    StarDigraph d = star_digraph(g, p);
    for (int i = 0; i < m && rep.path_terminal_ok; ++i) {
        if (p.stars[static_cast<std::size_t>(i)].leaves.count() != sigma) continue;
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        std::vector<int> stack{i};
        seen[static_cast<std::size_t>(i)] = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            if (p.stars[static_cast<std::size_t>(cur)].size() < sigma) {
                rep.path_terminal_ok = false;
                rep.counterexample = "star " + std::to_string(cur) + " of size " +
                                     std::to_string(p.stars[static_cast<std::size_t>(cur)].size()) +
                                     " reachable from sigma-star " + std::to_string(i);
                break;
            }
            for (int nxt : d.out_neighbors(cur))
                if (!seen[static_cast<std::size_t>(nxt)]) {
                    seen[static_cast<std::size_t>(nxt)] = 1;
                    stack.push_back(nxt);
                }
        }
    }
    return rep;
}

SigmaFormulaReport sigma_formula_check(const Graph& g) {
    SigmaFormulaReport rep;
    if (g.n() < 2) return rep;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return rep;
    if (has_k_star_partition(g, 2).first) return rep;  // has a nontrivial path cover
    rep.applicable = true;
    rep.sigma = star_partition_width(g).value;
    int best = 0;
    const std::uint64_t full = g.vertices().bits();
    for (std::uint64_t bits = 1; bits < full; ++bits) {
        VertexSet s(bits);
        int iso = isolated_after_removal(g, s);
        int val = (iso + s.count() - 1) / s.count();
        best = std::max(best, val);
    }
    rep.formula = best;
    rep.match = rep.sigma == rep.formula;
    return rep;
}

}  // namespace mbd
