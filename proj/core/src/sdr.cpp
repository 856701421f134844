#include "mbd/sdr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mbd {

namespace {

// Left nodes are (set, copy) pairs flattened as set * t + copy; right
// nodes are ground elements (remapped to 0..m-1).
struct Matcher {
    int t;
    const SetFamily* family;
    std::vector<std::vector<int>> adj;  // left -> right candidates
    std::vector<int> match_left;        // left -> right or -1
    std::vector<int> match_right;       // right -> left or -1

    bool augment(int left, std::vector<char>& visited) {
        for (int r : adj[static_cast<std::size_t>(left)]) {
            if (visited[static_cast<std::size_t>(r)]) continue;
            visited[static_cast<std::size_t>(r)] = 1;
            if (match_right[static_cast<std::size_t>(r)] == -1 ||
                augment(match_right[static_cast<std::size_t>(r)], visited)) {
                match_left[static_cast<std::size_t>(left)] = r;
                match_right[static_cast<std::size_t>(r)] = left;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

SdrResult sdr_t_exists(const SetFamily& family, int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    const int n = static_cast<int>(family.size());
    for (const auto& f : family)
        if (f.empty()) throw std::invalid_argument("sets must be nonempty for SDR queries");

    // Remap ground elements.
    std::map<int, int> elem_id;
    std::vector<int> elem_of;
    for (const auto& f : family)
        for (int e : f)
            if (elem_id.emplace(e, static_cast<int>(elem_of.size())).second) elem_of.push_back(e);
    const int m = static_cast<int>(elem_of.size());

    Matcher mt;
    mt.t = t;
    mt.family = &family;
    mt.adj.resize(static_cast<std::size_t>(n * t));
    for (int i = 0; i < n; ++i) {
        std::vector<int> ids;
        for (int e : family[static_cast<std::size_t>(i)]) ids.push_back(elem_id[e]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (int c = 0; c < t; ++c) mt.adj[static_cast<std::size_t>(i * t + c)] = ids;
    }
    mt.match_left.assign(static_cast<std::size_t>(n * t), -1);
    mt.match_right.assign(static_cast<std::size_t>(m), -1);

    int matched = 0;
    for (int l = 0; l < n * t; ++l) {
        std::vector<char> visited(static_cast<std::size_t>(m), 0);
        if (mt.augment(l, visited)) ++matched;
    }

    SdrResult out;
    if (matched == n * t) {
        out.exists = true;
        out.witness.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int c = 0; c < t; ++c)
                out.witness[static_cast<std::size_t>(i)].push_back(
                    elem_of[static_cast<std::size_t>(mt.match_left[static_cast<std::size_t>(i * t + c)])]);
        return out;
    }

    // Alternating reachability from every unmatched left node. Copies of
    // one set always enter together, so the reached left nodes collapse
    // to a subfamily F' with |union F'| = |reached right| < t |F'|.
    std::vector<char> left_r(static_cast<std::size_t>(n * t), 0);
    std::vector<char> right_r(static_cast<std::size_t>(m), 0);
    std::vector<int> queue;
    for (int l = 0; l < n * t; ++l)
        if (mt.match_left[static_cast<std::size_t>(l)] == -1) {
            left_r[static_cast<std::size_t>(l)] = 1;
            queue.push_back(l);
        }
    while (!queue.empty()) {
        int l = queue.back();
        queue.pop_back();
        for (int r : mt.adj[static_cast<std::size_t>(l)]) {
            if (right_r[static_cast<std::size_t>(r)]) continue;
            right_r[static_cast<std::size_t>(r)] = 1;
            int l2 = mt.match_right[static_cast<std::size_t>(r)];
            if (l2 != -1 && !left_r[static_cast<std::size_t>(l2)]) {
                left_r[static_cast<std::size_t>(l2)] = 1;
                queue.push_back(l2);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int c = 0; c < t; ++c)
            if (left_r[static_cast<std::size_t>(i * t + c)]) any = true;
        if (any) out.violating_subfamily.push_back(i);
    }
    if (out.violating_subfamily.empty())
        throw std::logic_error("matching deficit without a Hall violator");
    return out;
}

CliqueFamily clique_family(const Graph& h) {
    if (h.edge_count() < 1) throw std::invalid_argument("clique family needs at least one edge");
    CliqueFamily out;
    for (int v = 0; v < h.n(); ++v) {
        if (h.degree(v) == 0) continue;
        std::vector<int> incident;
        const auto& edges = h.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].first == v || edges[i].second == v) incident.push_back(static_cast<int>(i));
        out.sets.push_back(std::move(incident));
        out.vertex_of.push_back(v);
    }
    return out;
}

}  // namespace mbd
