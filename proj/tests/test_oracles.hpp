#pragma once

// Independent brute-force oracles used to freeze expected values. These
// deliberately avoid the library's search routines: everything here is a
// plain sweep over all subsets or all candidate subgraphs.

#include <vector>

#include "mbd/graph.hpp"

namespace oracle {

inline bool subset_dominates(const mbd::Graph& g, std::uint64_t mask) {
    for (int v = 0; v < g.n(); ++v) {
        bool covered = false;
        for (int u = 0; u < g.n(); ++u)
            if ((mask >> u) & 1)
                if (u == v || g.adjacent(u, v)) covered = true;
        if (!covered) return false;
    }
    return true;
}

inline bool subset_independent(const mbd::Graph& g, std::uint64_t mask) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (((mask >> u) & 1) && ((mask >> v) & 1) && g.adjacent(u, v)) return false;
    return true;
}

inline bool subset_covers(const mbd::Graph& g, std::uint64_t mask) {
    for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1) && !((mask >> v) & 1)) return false;
    return true;
}

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

inline int domination_number_sweep(const mbd::Graph& g) {
    int best = g.n();
    for (std::uint64_t m = 0; m < (1ull << g.n()); ++m)
        if (subset_dominates(g, m)) best = std::min(best, popcount(m));
    return best;
}

inline int independence_number_sweep(const mbd::Graph& g) {
    int best = 0;
    for (std::uint64_t m = 0; m < (1ull << g.n()); ++m)
        if (subset_independent(g, m)) best = std::max(best, popcount(m));
    return best;
}

inline int vertex_cover_number_sweep(const mbd::Graph& g) {
    int best = g.n();
    for (std::uint64_t m = 0; m < (1ull << g.n()); ++m)
        if (subset_covers(g, m)) best = std::min(best, popcount(m));
    return best;
}

// Maximum matching by sweeping over all subsets of the edge list.
inline int matching_number_sweep(const mbd::Graph& g) {
    const auto& es = g.edges();
    int best = 0;
    for (std::uint64_t m = 0; m < (1ull << es.size()); ++m) {
        std::uint64_t used = 0;
        bool ok = true;
        int size = 0;
        for (std::size_t i = 0; i < es.size() && ok; ++i)
            if ((m >> i) & 1) {
                std::uint64_t ends =
                    (1ull << es[i].first) | (1ull << es[i].second);
                if (used & ends) ok = false;
                used |= ends;
                ++size;
            }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// Induced K_{1,k} scan by brute force over center and leaf tuples.
inline bool has_induced_star_sweep(const mbd::Graph& g, int k) {
    for (int c = 0; c < g.n(); ++c) {
        std::vector<int> nb;
        for (int u = 0; u < g.n(); ++u)
            if (g.adjacent(c, u)) nb.push_back(u);
        std::uint64_t count = nb.size();
        if (static_cast<int>(count) < k) continue;
        for (std::uint64_t m = 0; m < (1ull << count); ++m) {
            if (popcount(m) != k) continue;
            bool indep = true;
            for (std::size_t i = 0; i < nb.size() && indep; ++i)
                for (std::size_t j = i + 1; j < nb.size() && indep; ++j)
                    if (((m >> i) & 1) && ((m >> j) & 1) && g.adjacent(nb[i], nb[j])) indep = false;
            if (indep) return true;
        }
    }
    return false;
}

}  // namespace oracle
