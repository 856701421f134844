#include "mbd/local_domination.hpp"

#include <stdexcept>

#include "mbd/invariants.hpp"

namespace mbd {

int local_domination_number_at(const Graph& g, VertexSet s, int ell) {
    if (ell < 1 || s.count() != ell) throw std::invalid_argument("need |S| == ell >= 1");
    VertexSet targets = g.neighborhood_of_set(s);
    for (int v : s)
        if (g.degree(v) == ell) targets.add(v);
    auto r = minimum_dominating_subset(g, targets, g.vertices() - s);
    if (!r) throw std::logic_error("local domination targets not coverable");  // cannot happen: deg > 0
    return r->count();
}

int local_domination_number(const Graph& g, int ell) {
    if (g.n() < 1) throw std::invalid_argument("empty graph");
    if (ell < 1 || min_degree(g) < ell)
        throw std::invalid_argument("local domination number needs min_degree >= ell >= 1");
    int best = 0;
    for_each_subset_of_size(g.vertices(), ell, [&](VertexSet s) {
        best = std::max(best, local_domination_number_at(g, s, ell));
        return false;
    });
    return best;
}

int local_domination_number_leaf_form(const Graph& g) {
    if (g.n() < 1 || min_degree(g) < 1)
        throw std::invalid_argument("leaf form needs min_degree >= 1");
    int best = 0;
    for (int v = 0; v < g.n(); ++v) {
        Graph h = g.induced(g.vertices() - VertexSet::single(v));
        VertexSet targets;
        for (int u : g.neighbors(v)) targets.add(u > v ? u - 1 : u);
        auto r = minimum_dominating_subset(h, targets, h.vertices());
        if (!r) throw std::logic_error("leaf-form targets not coverable");
        best = std::max(best, r->count());
    }
    return best;
}

bool is_induced_star_free(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("induced star test needs k >= 2");
    for (int center = 0; center < g.n(); ++center) {
        if (g.degree(center) < k) continue;
        bool found = for_each_subset_of_size(g.neighbors(center), k, [&](VertexSet leaves) {
            for (int u : leaves)
                if (g.neighbors(u).intersects(leaves)) return false;
            return true;  // independent k-set in N(center)
        });
        if (found) return false;
    }
    return true;
}

}  // namespace mbd
