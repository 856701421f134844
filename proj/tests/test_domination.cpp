#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mbd/battery.hpp"
#include "mbd/enumeration.hpp"
#include "mbd/generators.hpp"
#include "mbd/invariants.hpp"
#include "mbd/local_domination.hpp"
#include "mbd/sdr.hpp"
#include "mbd/thresholds.hpp"
#include "test_oracles.hpp"

using namespace mbd;

TEST_SUITE_BEGIN("domination");

TEST_CASE("local domination numbers of cycles") {
    CHECK(local_domination_number(cycle_graph(7), 1) == 2);
    CHECK(local_domination_number(cycle_graph(5), 1) == 2);
    CHECK(local_domination_number(cycle_graph(10), 2) == 4);
}

TEST_CASE("local domination example graph") {
    Graph g = local_domination_example_graph();
    CHECK(g.n() == 7);
    CHECK(g.edge_count() == 9);
    // hub and bottom vertices need two dominators, spokes only one
    CHECK(local_domination_number_at(g, VertexSet{0}, 1) == 2);
    CHECK(local_domination_number_at(g, VertexSet{5}, 1) == 2);
    CHECK(local_domination_number_at(g, VertexSet{6}, 1) == 2);
    for (int x = 1; x <= 4; ++x) CHECK(local_domination_number_at(g, VertexSet::single(x), 1) == 1);
    CHECK(local_domination_number(g, 1) == 2);
}

TEST_CASE("local domination preconditions") {
    CHECK_THROWS_AS(local_domination_number(path_graph(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(local_domination_number(Graph::from_edges(2, {}), 1), std::invalid_argument);
}

TEST_CASE("leaf form agrees with the general definition at ell = 1") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            CHECK(local_domination_number(g, 1) == local_domination_number_leaf_form(g));
    std::vector<Graph> corpus = {path_graph(7), path_graph(8), cycle_graph(7), cycle_graph(8),
                                 star_graph(6), grid_graph(4, 2), chorded_odd_path(3),
                                 complete_bipartite_graph(2, 6)};
    for (const Graph& g : corpus)
        CHECK(local_domination_number(g, 1) == local_domination_number_leaf_form(g));
}

TEST_CASE("induced star freeness") {
    CHECK(!is_induced_star_free(star_graph(3), 3));
    CHECK(is_induced_star_free(cycle_graph(6), 3));
    CHECK(is_induced_star_free(chorded_odd_path(3), 3));
    CHECK_THROWS_AS(is_induced_star_free(path_graph(3), 1), std::invalid_argument);

    // Against the sweep oracle over random graphs.
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 80; ++iter) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        Graph g = Graph::from_edges(n, es);
        for (int k = 2; k <= 4; ++k)
            CHECK(is_induced_star_free(g, k) == !oracle::has_induced_star_sweep(g, k));
    }
}

TEST_CASE("line graphs are claw-free") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& h : enumerate_graphs(n)) {
            if (h.edge_count() < 1) continue;
            CHECK(is_induced_star_free(line_graph(h).first, 3));
        }
}

TEST_CASE("star-free graphs have small local domination numbers") {
    // An induced-K_{1,k}-free graph needs at most k-1 vertices to
    // dominate any open neighborhood, which also caps the Staller-start
    // threshold at Staller bias one.
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            for (int k = 3; k <= 5; ++k) {
                if (!is_induced_star_free(g, k)) continue;
                CHECK(local_domination_number(g, 1) <= k - 1);
                ThresholdValue a1p = dominator_threshold(g, 1, Player::Staller);
                REQUIRE(a1p.is_finite());
                CHECK(a1p.value <= k - 1);
            }
}

namespace {

// Exhaustive assignment search: try every way of giving each set t
// distinct representatives.
bool sdr_brute(const SetFamily& fam, int t, std::size_t idx, std::vector<int>& used) {
    if (idx == fam.size() * static_cast<std::size_t>(t)) return true;
    std::size_t set_idx = idx / static_cast<std::size_t>(t);
    for (int e : fam[set_idx]) {
        bool taken = false;
        for (int u : used)
            if (u == e) taken = true;
        if (taken) continue;
        used.push_back(e);
        if (sdr_brute(fam, t, idx + 1, used)) return true;
        used.pop_back();
    }
    return false;
}

}  // namespace

TEST_CASE("sdr examples") {
    SdrResult r1 = sdr_t_exists({{1, 2}, {2, 3}, {1, 3}}, 1);
    CHECK(r1.exists);

    SdrResult r2 = sdr_t_exists({{1}, {1}}, 1);
    CHECK(!r2.exists);
    CHECK(r2.violating_subfamily == std::vector<int>{0, 1});

    CHECK_THROWS_AS(sdr_t_exists({{1}, {}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(sdr_t_exists({{1}}, 0), std::invalid_argument);
}

TEST_CASE("sdr against the brute-force assignment oracle") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        int sets = 1 + static_cast<int>(rng() % 6);
        int ground = 1 + static_cast<int>(rng() % 10);
        int t = 1 + static_cast<int>(rng() % 2);
        SetFamily fam;
        for (int i = 0; i < sets; ++i) {
            std::vector<int> f;
            for (int e = 0; e < ground; ++e)
                if (rng() % 3 == 0) f.push_back(e);
            if (f.empty()) f.push_back(static_cast<int>(rng() % ground));
            fam.push_back(f);
        }
        SdrResult r = sdr_t_exists(fam, t);
        std::vector<int> used;
        CHECK(r.exists == sdr_brute(fam, t, 0, used));

        if (r.exists) {
            // Witness validity, representative by representative.
            std::vector<int> all;
            for (std::size_t i = 0; i < fam.size(); ++i) {
                CHECK(r.witness[i].size() == static_cast<std::size_t>(t));
                for (int e : r.witness[i]) {
                    bool member = false;
                    for (int x : fam[i])
                        if (x == e) member = true;
                    CHECK(member);
                    all.push_back(e);
                }
            }
            std::sort(all.begin(), all.end());
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        } else {
            // The certificate violates the counting condition literally.
            std::vector<int> uni;
            for (int i : r.violating_subfamily)
                for (int e : fam[static_cast<std::size_t>(i)]) uni.push_back(e);
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            CHECK(static_cast<int>(uni.size()) <
                  t * static_cast<int>(r.violating_subfamily.size()));
        }
    }
}

TEST_CASE("clique families") {
    CliqueFamily k3 = clique_family(complete_graph(3));
    REQUIRE(k3.sets.size() == 3);
    for (const auto& s : k3.sets) CHECK(s.size() == 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            int common = 0;
            for (int a : k3.sets[i])
                for (int b : k3.sets[j])
                    if (a == b) ++common;
            CHECK(common == 1);
        }

    CliqueFamily star = clique_family(star_graph(3));
    REQUIRE(star.sets.size() == 4);
    CHECK(star.sets[0].size() == 3);  // the center collects all edges
    for (std::size_t i = 1; i < 4; ++i) CHECK(star.sets[i].size() == 1);

    // Every edge appears in exactly two sets.
    for (int n = 2; n <= 6; ++n)
        for (const Graph& h : enumerate_graphs(n)) {
            if (h.edge_count() < 1) continue;
            CliqueFamily fam = clique_family(h);
            std::vector<int> appearances(static_cast<std::size_t>(h.edge_count()), 0);
            for (const auto& s : fam.sets)
                for (int e : s) ++appearances[static_cast<std::size_t>(e)];
            for (int c : appearances) CHECK(c == 2);
        }
}

TEST_CASE("clique families admit t-representatives above the degree bound") {
    for (int n = 3; n <= 7; ++n)
        for (const Graph& h : enumerate_graphs(n))
            for (int t = 1; t <= 2; ++t) {
                if (h.edge_count() < 1 || min_degree(h) < 2 * t) continue;
                CHECK(sdr_t_exists(clique_family(h).sets, t).exists);
            }
}

TEST_SUITE_END();
