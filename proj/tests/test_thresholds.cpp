#include <doctest.h>

#include "mbd/generators.hpp"
#include "mbd/graph_io.hpp"
#include "mbd/invariants.hpp"
#include "mbd/thresholds.hpp"

using namespace mbd;

TEST_SUITE_BEGIN("thresholds");

TEST_CASE("threshold value semantics") {
    CHECK(ThresholdValue::finite(2).less_or_equal(ThresholdValue::finite(3)));
    CHECK(ThresholdValue::finite(99).less_or_equal(ThresholdValue::infinite()));
    CHECK(!ThresholdValue::infinite().less_or_equal(ThresholdValue::finite(99)));
    CHECK(ThresholdValue::infinite().less_or_equal(ThresholdValue::infinite()));
    CHECK(ThresholdValue::finite(2).to_string() == "2");
    CHECK(ThresholdValue::infinite().to_string() == "inf");
    CHECK_THROWS_AS((void)ThresholdValue::undecided().less_or_equal(ThresholdValue::finite(1)),
                    std::logic_error);
}

TEST_CASE("dominator thresholds on paths") {
    CHECK(dominator_threshold(path_graph(5), 1, Player::Staller) == ThresholdValue::finite(2));
    CHECK(dominator_threshold(path_graph(6), 1, Player::Staller) == ThresholdValue::finite(1));
    CHECK(dominator_threshold(path_graph(4), 2, Player::Staller) == ThresholdValue::infinite());
}

TEST_CASE("staller thresholds on grids and paths") {
    CHECK(staller_threshold(grid_graph(2, 2), 1, Player::Dominator) == ThresholdValue::finite(3));
    CHECK(staller_threshold(grid_graph(3, 2), 1, Player::Dominator) == ThresholdValue::finite(2));
    CHECK(staller_threshold(path_graph(3), 1, Player::Dominator) == ThresholdValue::infinite());
}

TEST_CASE("single-vertex graph") {
    Graph k1 = complete_graph(1);
    for (int ell = 1; ell <= 3; ++ell) {
        CHECK(dominator_threshold(k1, ell, Player::Dominator) == ThresholdValue::finite(1));
        // Staller starts, takes the lone vertex, and owns its whole
        // closed neighborhood: no Dominator bias helps.
        CHECK(dominator_threshold(k1, ell, Player::Staller) == ThresholdValue::infinite());
    }
}

TEST_CASE("cycle staller threshold respects the degree cap") {
    Graph c5 = cycle_graph(5);
    ThresholdValue b1p = staller_threshold(c5, 1, Player::Staller);
    REQUIRE(b1p.is_finite());
    CHECK(b1p.value <= min_degree(c5) + 1);
    CHECK(b1p == ThresholdValue::finite(2));
}

TEST_CASE("threshold table for P_4") {
    ThresholdTable t = threshold_table(path_graph(4), 2);
    CHECK(t.graph6 == write_graph6(path_graph(4)));
    REQUIRE(t.find("a'", 1) != nullptr);
    CHECK(*t.find("a'", 1) == ThresholdValue::finite(1));
    CHECK(*t.find("b", 1) == ThresholdValue::finite(2));
    CHECK(*t.find("b'", 1) == ThresholdValue::finite(2));
    CHECK(*t.find("a'", 2) == ThresholdValue::infinite());
    for (const auto& c : t.checks) CHECK(c.pass);
    CHECK(t.to_json().find("\"schema\":\"mbd-thresholds/1\"") != std::string::npos);
    CHECK(t.to_json().find("\"value\":\"inf\"") != std::string::npos);
}

TEST_CASE("cross relations and index monotonicity on a corpus") {
    std::vector<Graph> corpus = {path_graph(4), path_graph(5), cycle_graph(5), complete_graph(4),
                                 grid_graph(2, 2), star_graph(3)};
    for (const Graph& g : corpus) {
        ThresholdTable t = threshold_table(g, 3);
        for (const auto& c : t.checks) {
            INFO(write_graph6(g), " ", c.name, " ", c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("winner equivalences against computed thresholds") {
    std::vector<Graph> corpus = {path_graph(4), path_graph(5), cycle_graph(5), star_graph(3),
                                 grid_graph(2, 2)};
    for (const Graph& g : corpus)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                bool wd = solve_game(g, {i, j, Player::Dominator}) == SolveStatus::DominatorWin;
                bool wpd = solve_game(g, {i, j, Player::Staller}) == SolveStatus::DominatorWin;
                ThresholdValue aj = dominator_threshold(g, j, Player::Dominator);
                ThresholdValue ajp = dominator_threshold(g, j, Player::Staller);
                ThresholdValue bi = staller_threshold(g, i, Player::Dominator);
                ThresholdValue bip = staller_threshold(g, i, Player::Staller);
                // Dominator wins iff his threshold is at most his bias,
                // iff Staller's threshold exceeds her bias.
                CHECK(wd == aj.less_or_equal(ThresholdValue::finite(i)));
                CHECK(wd == !bi.less_or_equal(ThresholdValue::finite(j)));
                CHECK(wpd == ajp.less_or_equal(ThresholdValue::finite(i)));
                CHECK(wpd == !bip.less_or_equal(ThresholdValue::finite(j)));
            }
}

TEST_CASE("budget exhaustion yields undecided cells, not answers") {
    SolverOptions tiny;
    tiny.node_budget = 2;
    ThresholdValue t = dominator_threshold(grid_graph(3, 3), 1, Player::Dominator, tiny);
    CHECK(t.is_undecided());
    ThresholdTable table = threshold_table(grid_graph(3, 3), 1, tiny);
    CHECK(table.to_json().find("undecided") != std::string::npos);
}

TEST_SUITE_END();
