#include "mbd/invariants.hpp"

#include <stdexcept>
#include <unordered_map>

namespace mbd {

int min_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    int d = VertexSet::kMaxVertices;
    for (int v = 0; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

namespace {

// Branch on the first undominated vertex: some vertex of its closed
// neighborhood must be in every dominating set.
void dominating_bb(const Graph& g, VertexSet covered, int chosen, int& best) {
    if (covered == g.vertices()) {
        best = std::min(best, chosen);
        return;
    }
    if (chosen + 1 >= best) return;
    int v = (g.vertices() - covered).first();
    for (int u : g.closed_neighborhood(v))
        dominating_bb(g, covered | g.closed_neighborhood(u), chosen + 1, best);
}

int matching_rec(const Graph& g, VertexSet present, std::unordered_map<std::uint64_t, int>& memo) {
    while (!present.empty()) {
        int v = present.first();
        if ((g.neighbors(v) & present).empty())
            present.remove(v);
        else
            break;
    }
    if (present.empty()) return 0;
    auto it = memo.find(present.bits());
    if (it != memo.end()) return it->second;
    int v = present.first();
    int best = matching_rec(g, present - VertexSet::single(v), memo);
    for (int u : g.neighbors(v) & present) {
        int r = 1 + matching_rec(g, present - VertexSet::single(v) - VertexSet::single(u), memo);
        best = std::max(best, r);
    }
    memo.emplace(present.bits(), best);
    return best;
}

int independence_rec(const Graph& g, VertexSet present, std::unordered_map<std::uint64_t, int>& memo) {
    if (present.empty()) return 0;
    auto it = memo.find(present.bits());
    if (it != memo.end()) return it->second;
    int v = present.first();
    int skip = independence_rec(g, present - VertexSet::single(v), memo);
    int take = 1 + independence_rec(g, present - g.closed_neighborhood(v), memo);
    int best = std::max(skip, take);
    memo.emplace(present.bits(), best);
    return best;
}

}  // namespace

int domination_number(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    int best = g.n();
    dominating_bb(g, VertexSet{}, 0, best);
    return best;
}

VertexSet minimum_dominating_set(const Graph& g) {
    int gamma = domination_number(g);
    VertexSet found;
    for_each_subset_of_size(g.vertices(), gamma, [&](VertexSet s) {
        VertexSet covered;
        for (int v : s) covered |= g.closed_neighborhood(v);
        if (covered == g.vertices()) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

int matching_number(const Graph& g) {
    std::unordered_map<std::uint64_t, int> memo;
    return matching_rec(g, g.vertices(), memo);
}

int independence_number(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    std::unordered_map<std::uint64_t, int> memo;
    return independence_rec(g, g.vertices(), memo);
}

int vertex_cover_number(const Graph& g) {
    return g.n() - independence_number(g);
}

std::vector<Edge> maximum_matching(const Graph& g) {
    std::unordered_map<std::uint64_t, int> memo;
    VertexSet present = g.vertices();
    std::vector<Edge> out;
    int target = matching_rec(g, present, memo);
    while (target > 0) {
        bool advanced = false;
        for (auto [u, v] : g.edges()) {
            if (!present.contains(u) || !present.contains(v)) continue;
            VertexSet rest = present - VertexSet::single(u) - VertexSet::single(v);
            if (matching_rec(g, rest, memo) == target - 1) {
                out.emplace_back(u, v);
                present = rest;
                --target;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("maximum matching reconstruction failed");
    }
    return out;
}

std::optional<VertexSet> minimum_dominating_subset(const Graph& g, VertexSet targets,
                                                   VertexSet candidates) {
    VertexSet reachable;
    for (int v : candidates) reachable |= g.closed_neighborhood(v);
    if (!targets.subset_of(reachable)) return std::nullopt;
    for (int k = 0; k <= candidates.count(); ++k) {
        VertexSet found;
        bool ok = for_each_subset_of_size(candidates, k, [&](VertexSet s) {
            VertexSet covered;
            for (int v : s) covered |= g.closed_neighborhood(v);
            if (targets.subset_of(covered)) {
                found = s;
                return true;
            }
            return false;
        });
        if (ok) return found;
    }
    return std::nullopt;
}

}  // namespace mbd
