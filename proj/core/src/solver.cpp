#include "mbd/solver.hpp"

#include <algorithm>
#include <future>

namespace mbd {

Solver::Solver(Graph g, int dominator_bias, int staller_bias, SolverOptions options)
    : g_(std::move(g)), cfg_{dominator_bias, staller_bias, Player::Dominator}, opt_(options) {
    if (!cfg_.valid()) throw std::invalid_argument("biases must be positive");
    if (g_.n() < 1) throw std::invalid_argument("solver needs a nonempty graph");
}

Player Solver::search(VertexSet dom, VertexSet sta, Player mover) {
    // Terminal checks, Staller's condition first.
    for (int v = 0; v < g_.n(); ++v)
        if (g_.closed_neighborhood(v).subset_of(sta)) return Player::Staller;
    VertexSet pool = g_.vertices() - dom - sta;
    if (opt_.early_dominator_stop || pool.empty()) {
        VertexSet covered;
        for (int v : dom) covered |= g_.closed_neighborhood(v);
        if (covered == g_.vertices()) return Player::Dominator;
        if (pool.empty()) return Player::Dominator;  // unreachable: see above
    }

    Memo& memo = memo_[static_cast<int>(mover)];
    auto key = std::make_pair(dom.bits(), sta.bits());
    if (auto it = memo.find(key); it != memo.end()) return static_cast<Player>(it->second);

    if (++nodes_ > opt_.node_budget) throw BudgetExceeded("solver node budget exceeded");

    const int k = std::min(cfg_.bias_of(mover), pool.count());
    Player result = opponent(mover);
    for_each_subset_of_size(pool, k, [&](VertexSet m) {
        VertexSet nd = dom, ns = sta;
        if (mover == Player::Dominator)
            nd |= m;
        else
            ns |= m;
        if (search(nd, ns, opponent(mover)) == mover) {
            result = mover;
            return true;
        }
        return false;
    });
    memo.emplace(key, static_cast<std::uint8_t>(result));
    return result;
}

SolveStatus Solver::winner_from(const GameState& state) {
    try {
        return win_status(search(state.dom, state.sta, state.to_move));
    } catch (const BudgetExceeded&) {
        return SolveStatus::Undecided;
    }
}

SolveStatus Solver::solve(Player starter) {
    if (opt_.threads <= 1 && !opt_.root_symmetry_pruning)
        return winner_from(GameState{VertexSet{}, VertexSet{}, starter});
    return solve_root_split(starter);
}

SolveStatus Solver::solve_root_split(Player starter) {
    GameState root{VertexSet{}, VertexSet{}, starter};
    if (is_terminal(g_, root)) return winner_from(root);

    std::vector<VertexSet> moves = legal_moves(g_, root, cfg_);
    if (opt_.root_symmetry_pruning) {
        // Keep only the lexicographically least move of each orbit; an
        // automorphic image of a winning move is winning too.
        auto autos = automorphisms(g_);
        std::vector<VertexSet> keep;
        for (VertexSet m : moves) {
            bool minimal = true;
            for (const auto& pi : autos) {
                VertexSet img;
                for (int v : m) img.add(pi[static_cast<std::size_t>(v)]);
                if (img.lex_before(m)) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) keep.push_back(m);
        }
        moves = std::move(keep);
    }

    if (opt_.threads <= 1) {
        bool any_undecided = false;
        for (VertexSet m : moves) {
            SolveStatus r = winner_from(apply_move(g_, root, cfg_, m));
            if (r == win_status(starter)) return r;
            if (r == SolveStatus::Undecided) any_undecided = true;
        }
        return any_undecided ? SolveStatus::Undecided : win_status(opponent(starter));
    }

    SolverOptions child_opt = opt_;
    child_opt.threads = 1;
    child_opt.root_symmetry_pruning = false;

    std::vector<std::future<std::pair<SolveStatus, std::uint64_t>>> futures;
    futures.reserve(moves.size());
    for (VertexSet m : moves) {
        futures.push_back(std::async(std::launch::async, [this, m, root, child_opt]() {
            Solver child(g_, cfg_.dominator_bias, cfg_.staller_bias, child_opt);
            SolveStatus r = child.winner_from(apply_move(g_, root, cfg_, m));
            return std::make_pair(r, child.nodes_visited());
        }));
    }
    bool any_undecided = false;
    SolveStatus result = win_status(opponent(starter));
    for (auto& f : futures) {
        auto [r, n] = f.get();
        nodes_ += n;
        if (r == win_status(starter)) result = r;  // keep draining futures
        if (r == SolveStatus::Undecided) any_undecided = true;
    }
    if (result != win_status(starter) && any_undecided) return SolveStatus::Undecided;
    return result;
}

SolveStatus solve_game(const Graph& g, const GameConfig& cfg, const SolverOptions& options) {
    Solver solver(g, cfg.dominator_bias, cfg.staller_bias, options);
    return solver.solve(cfg.starter);
}

namespace {

// Deliberately different machinery from the Solver: vector-based sets, no
// bit tricks, recomputing everything per node.
struct RefPosition {
    std::vector<char> owner;  // 0 = unplayed, 'D', 'S'
};

bool ref_staller_won(const Graph& g, const RefPosition& p) {
    for (int v = 0; v < g.n(); ++v) {
        bool all = p.owner[static_cast<std::size_t>(v)] == 'S';
        for (int u : g.neighbors(v).to_vector())
            if (p.owner[static_cast<std::size_t>(u)] != 'S') all = false;
        if (all) return true;
    }
    return false;
}

bool ref_dominator_dominates(const Graph& g, const RefPosition& p) {
    for (int v = 0; v < g.n(); ++v) {
        bool dominated = p.owner[static_cast<std::size_t>(v)] == 'D';
        for (int u : g.neighbors(v).to_vector())
            if (p.owner[static_cast<std::size_t>(u)] == 'D') dominated = true;
        if (!dominated) return false;
    }
    return true;
}

Player ref_search(const Graph& g, const GameConfig& cfg, RefPosition& p, Player mover) {
    if (ref_staller_won(g, p)) return Player::Staller;
    if (ref_dominator_dominates(g, p)) return Player::Dominator;
    std::vector<int> open;
    for (int v = 0; v < g.n(); ++v)
        if (p.owner[static_cast<std::size_t>(v)] == 0) open.push_back(v);
    if (open.empty()) return Player::Dominator;

    const int k = std::min(cfg.bias_of(mover), static_cast<int>(open.size()));
    const char mark = player_char(mover);
    std::vector<int> pick(static_cast<std::size_t>(k));
    Player best = opponent(mover);

    // Enumerate k-subsets of `open` recursively.
    auto enumerate = [&](auto&& self, int depth, int from) -> bool {
        if (depth == k) {
            for (int i = 0; i < k; ++i) p.owner[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = mark;
            Player r = ref_search(g, cfg, p, opponent(mover));
            for (int i = 0; i < k; ++i) p.owner[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])] = 0;
            if (r == mover) {
                best = mover;
                return true;
            }
            return false;
        }
        for (std::size_t i = static_cast<std::size_t>(from); i < open.size(); ++i) {
            pick[static_cast<std::size_t>(depth)] = open[i];
            if (self(self, depth + 1, static_cast<int>(i) + 1)) return true;
        }
        return false;
    };
    enumerate(enumerate, 0, 0);
    return best;
}

}  // namespace

Player reference_winner(const Graph& g, const GameConfig& cfg) {
    if (g.n() < 1) throw std::invalid_argument("reference evaluator needs a nonempty graph");
    RefPosition p{std::vector<char>(static_cast<std::size_t>(g.n()), 0)};
    return ref_search(g, cfg, p, cfg.starter);
}

}  // namespace mbd
