#include <doctest.h>

#include "mbd/enumeration.hpp"
#include "mbd/generators.hpp"
#include "mbd/solver.hpp"
#include "mbd/strategy.hpp"

using namespace mbd;

TEST_SUITE_BEGIN("game");

TEST_CASE("legal move enumeration") {
    Graph p3 = path_graph(3);
    GameConfig cfg{1, 2, Player::Dominator};

    GameState s0 = initial_state(cfg);
    auto moves = legal_moves(p3, s0, cfg);
    REQUIRE(moves.size() == 3);
    CHECK(moves[0] == VertexSet{0});
    CHECK(moves[1] == VertexSet{1});
    CHECK(moves[2] == VertexSet{2});

    GameState s1{VertexSet{1}, VertexSet{}, Player::Staller};
    auto smoves = legal_moves(p3, s1, cfg);
    REQUIRE(smoves.size() == 1);
    CHECK(smoves[0] == VertexSet{0, 2});

    GameState done{VertexSet{0, 1, 2}, VertexSet{}, Player::Staller};
    CHECK_THROWS_AS(legal_moves(p3, done, cfg), std::logic_error);

    GameState claimed{VertexSet{}, VertexSet{0, 1}, Player::Dominator};
    CHECK_THROWS_AS(legal_moves(p3, claimed, cfg), std::logic_error);
}

TEST_CASE("apply move") {
    Graph p3 = path_graph(3);
    GameConfig cfg{1, 1, Player::Dominator};
    GameState s0 = initial_state(cfg);
    GameState s1 = apply_move(p3, s0, cfg, VertexSet{1});
    CHECK(s1.dom == VertexSet{1});
    CHECK(s1.sta.empty());
    CHECK(s1.to_move == Player::Staller);

    CHECK_THROWS_AS(apply_move(p3, s1, cfg, VertexSet{1}), std::invalid_argument);   // overlap
    CHECK_THROWS_AS(apply_move(p3, s1, cfg, VertexSet{0, 2}), std::invalid_argument);  // size
}

TEST_CASE("win detection") {
    Graph p3 = path_graph(3);
    CHECK(staller_has_won(p3, {VertexSet{}, VertexSet{0, 1}, Player::Dominator}));
    CHECK(!staller_has_won(p3, {VertexSet{}, VertexSet{0, 2}, Player::Dominator}));

    Graph c5 = cycle_graph(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK(!staller_has_won(c5, {VertexSet{}, VertexSet{u, v}, Player::Dominator}));

    Graph p5 = path_graph(5);
    CHECK(dominator_has_won(p3, {VertexSet{1}, VertexSet{}, Player::Staller}));
    // The oracle is the closed-neighborhood union itself: N[0] and N[1]
    // miss 3 and 4, while N[1] with either of N[3], N[4] reaches all of P_5.
    CHECK(!dominator_has_won(p5, {VertexSet{0, 1}, VertexSet{}, Player::Staller}));
    CHECK(dominator_has_won(p5, {VertexSet{1, 3}, VertexSet{}, Player::Staller}));
    CHECK(dominator_has_won(p5, {VertexSet{1, 4}, VertexSet{}, Player::Staller}));
}

TEST_CASE("terminal states") {
    Graph p3 = path_graph(3);
    CHECK(is_terminal(p3, {VertexSet{}, VertexSet{}, Player::Dominator}) == std::nullopt);
    CHECK(is_terminal(p3, {VertexSet{}, VertexSet{0, 1}, Player::Dominator}) == Player::Staller);
    // Full board without a Staller claim resolves to Dominator.
    CHECK(is_terminal(p3, {VertexSet{0, 2}, VertexSet{1}, Player::Dominator}) == Player::Dominator);
}

TEST_CASE("terminal equivalence on full boards") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const std::uint64_t full = g.vertices().bits();
            for (std::uint64_t bits = 0; bits <= full; ++bits) {
                VertexSet dom(bits);
                if (!dom.subset_of(g.vertices())) continue;
                GameState s{dom, g.vertices() - dom, Player::Dominator};
                CHECK(dominator_has_won(g, s) != staller_has_won(g, s));
            }
        }
}

TEST_CASE("solver on known positions") {
    CHECK(solve_game(path_graph(6), {1, 1, Player::Dominator}) == SolveStatus::DominatorWin);
    CHECK(solve_game(path_graph(3), {1, 1, Player::Staller}) == SolveStatus::StallerWin);
    CHECK(solve_game(grid_graph(2, 2), {1, 2, Player::Dominator}) == SolveStatus::DominatorWin);
}

TEST_CASE("solver agrees with the reference evaluator") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b)
                    for (Player st : {Player::Dominator, Player::Staller}) {
                        GameConfig cfg{a, b, st};
                        CHECK(solve_game(g, cfg) == win_status(reference_winner(g, cfg)));
                    }
}

TEST_CASE("early dominator stop never changes the winner") {
    std::vector<Graph> corpus = {path_graph(5), path_graph(6), cycle_graph(5), cycle_graph(6),
                                 star_graph(4), grid_graph(3, 2), complete_graph(4)};
    for (const Graph& g : corpus)
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (Player st : {Player::Dominator, Player::Staller}) {
                    SolverOptions with, without;
                    without.early_dominator_stop = false;
                    GameConfig cfg{a, b, st};
                    CHECK(solve_game(g, cfg, with) == solve_game(g, cfg, without));
                }
}

TEST_CASE("solver determinism across modes") {
    std::vector<Graph> corpus = {path_graph(7), cycle_graph(6), grid_graph(3, 2), star_graph(5)};
    for (const Graph& g : corpus)
        for (Player st : {Player::Dominator, Player::Staller}) {
            GameConfig cfg{1, 2, st};
            SolveStatus seq = solve_game(g, cfg);
            CHECK(solve_game(g, cfg) == seq);  // repeated run
            SolverOptions par;
            par.threads = 4;
            CHECK(solve_game(g, cfg, par) == seq);
            SolverOptions sym;
            sym.root_symmetry_pruning = true;
            CHECK(solve_game(g, cfg, sym) == seq);
        }
}

TEST_CASE("root symmetry pruning is safe on the small census") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            for (Player st : {Player::Dominator, Player::Staller}) {
                SolverOptions sym;
                sym.root_symmetry_pruning = true;
                GameConfig cfg{1, 1, st};
                CHECK(solve_game(g, cfg, sym) == solve_game(g, cfg));
            }
}

TEST_CASE("node budget reports undecided") {
    SolverOptions opt;
    opt.node_budget = 3;
    CHECK(solve_game(grid_graph(3, 3), {1, 1, Player::Dominator}, opt) == SolveStatus::Undecided);
}

TEST_CASE("transcript formats") {
    MatchTranscript t;
    t.moves.push_back({Player::Dominator, VertexSet{0, 3}});
    t.moves.push_back({Player::Staller, VertexSet{5}});
    t.result = Player::Dominator;
    CHECK(t.to_text() == "D {0,3}\nS {5}\nRESULT D\n");
    CHECK(t.to_json() ==
          R"({"moves":[{"player":"D","vertices":[0,3]},{"player":"S","vertices":[5]}],"result":"D"})");
}

namespace {

// A deliberately illegal strategy for the error path.
class Cheater final : public Strategy {
public:
    std::string name() const override { return "cheater"; }
    void start(const Graph&, const GameConfig&, Player) override {}
    VertexSet choose(const Graph&, const GameConfig&, const GameState& state) override {
        return state.to_move == Player::Dominator ? VertexSet{0} : VertexSet{0};
    }
};

}  // namespace

TEST_CASE("play_match validates moves and reports the offender") {
    Graph p4 = path_graph(4);
    auto d = make_best_response();
    Cheater cheat;
    // Dominator takes 0 first, then the cheater replays it.
    bool caught = false;
    try {
        play_match(p4, {1, 1, Player::Dominator}, *d, cheat);
    } catch (const StrategyError& e) {
        caught = true;
        CHECK(std::string(e.what()).find("cheater") != std::string::npos);
        CHECK(std::string(e.what()).find("{0}") != std::string::npos);
    }
    CHECK(caught);
}

TEST_CASE("match outcome is consistent with is_terminal and deterministic") {
    Graph p4 = path_graph(4);
    auto d1 = make_best_response();
    auto s1 = make_best_response();
    MatchResult r1 = play_match(p4, {1, 1, Player::Dominator}, *d1, *s1);
    CHECK(r1.winner == Player::Dominator);
    auto d2 = make_best_response();
    auto s2 = make_best_response();
    MatchResult r2 = play_match(p4, {1, 1, Player::Dominator}, *d2, *s2);
    CHECK(r1.transcript.to_text() == r2.transcript.to_text());

    Graph k1 = complete_graph(1);
    auto d3 = make_best_response();
    auto s3 = make_best_response();
    MatchResult r3 = play_match(k1, {1, 1, Player::Dominator}, *d3, *s3);
    CHECK(r3.winner == Player::Dominator);
    CHECK(r3.transcript.moves.size() == 1);
}

TEST_SUITE_END();
