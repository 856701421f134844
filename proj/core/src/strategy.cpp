#include "mbd/strategy.hpp"

namespace mbd {

MatchResult play_match(const Graph& g, const GameConfig& cfg, Strategy& dominator,
                       Strategy& staller) {
    dominator.start(g, cfg, Player::Dominator);
    staller.start(g, cfg, Player::Staller);

    MatchResult out;
    GameState state = initial_state(cfg);
    while (true) {
        auto winner = is_terminal(g, state);
        if (winner) {
            out.winner = *winner;
            out.transcript.result = *winner;
            return out;
        }
        Strategy& mover = state.to_move == Player::Dominator ? dominator : staller;
        VertexSet move = mover.choose(g, cfg, state);
        if (!move.subset_of(unplayed_vertices(g, state)) ||
            move.count() != required_move_size(g, state, cfg))
            throw StrategyError("strategy '" + mover.name() + "' returned illegal move " +
                                move.to_string());
        out.transcript.moves.push_back({state.to_move, move});
        state = apply_move(g, state, cfg, move);
    }
}

std::optional<VertexSet> staller_immediate_win(const Graph& g, const GameState& s, int bias) {
    for (int v = 0; v < g.n(); ++v) {
        VertexSet rest = g.closed_neighborhood(v) - s.sta;
        if (rest.count() <= bias && !rest.intersects(s.dom)) return rest;
    }
    return std::nullopt;
}

std::optional<VertexSet> dominator_completion(const Graph& g, const GameState& s, int bias) {
    VertexSet covered;
    for (int v : s.dom) covered |= g.closed_neighborhood(v);
    VertexSet missing = g.vertices() - covered;
    if (missing.empty()) return VertexSet{};
    VertexSet pool = unplayed_vertices(g, s);
    for (int k = 1; k <= std::min(bias, pool.count()); ++k) {
        VertexSet found;
        bool ok = for_each_subset_of_size(pool, k, [&](VertexSet x) {
            VertexSet cov = covered;
            for (int v : x) cov |= g.closed_neighborhood(v);
            if (cov == g.vertices()) {
                found = x;
                return true;
            }
            return false;
        });
        if (ok) return found;
    }
    return std::nullopt;
}

VertexSet pad_move(const Graph& g, const GameState& s, VertexSet move, int size) {
    VertexSet pool = unplayed_vertices(g, s) - move;
    while (move.count() < size) {
        if (pool.empty()) throw std::logic_error("pad_move: not enough unplayed vertices");
        int v = pool.first();
        move.add(v);
        pool.remove(v);
    }
    return move;
}

namespace {

class BestResponse final : public Strategy {
public:
    explicit BestResponse(SolverOptions options) : options_(options) {}

    std::string name() const override { return "best_response"; }

    void start(const Graph& g, const GameConfig& cfg, Player role) override {
        role_ = role;
        solver_ = std::make_unique<Solver>(g, cfg.dominator_bias, cfg.staller_bias, options_);
    }

    VertexSet choose(const Graph& g, const GameConfig& cfg, const GameState& state) override {
        VertexSet pool = unplayed_vertices(g, state);
        int k = std::min(cfg.bias_of(state.to_move), pool.count());
        std::optional<VertexSet> fallback;
        std::optional<VertexSet> winning;
        for_each_subset_of_size(pool, k, [&](VertexSet m) {
            if (!fallback) fallback = m;
            SolveStatus r = solver_->winner_from(apply_move(g, state, cfg, m));
            if (r == SolveStatus::Undecided) throw BudgetExceeded("best_response: solver budget exceeded");
            if (r == win_status(role_)) {
                winning = m;
                return true;
            }
            return false;
        });
        if (winning) return *winning;
        return *fallback;
    }

private:
    SolverOptions options_;
    Player role_ = Player::Dominator;
    std::unique_ptr<Solver> solver_;
};

class FirstMove final : public Strategy {
public:
    std::string name() const override { return "first_move"; }
    void start(const Graph&, const GameConfig&, Player) override {}
    VertexSet choose(const Graph& g, const GameConfig& cfg, const GameState& state) override {
        return pad_move(g, state, VertexSet{}, required_move_size(g, state, cfg));
    }
};

}  // namespace

std::unique_ptr<Strategy> make_best_response(SolverOptions options) {
    return std::make_unique<BestResponse>(options);
}

std::unique_ptr<Strategy> make_first_move_strategy() {
    return std::make_unique<FirstMove>();
}

}  // namespace mbd
