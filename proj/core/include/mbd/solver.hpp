#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "mbd/game.hpp"

namespace mbd {

// Exhausting the node budget is an explicit outcome, never a guess.
enum class SolveStatus : std::uint8_t { DominatorWin, StallerWin, Undecided };

inline SolveStatus win_status(Player p) {
    return p == Player::Dominator ? SolveStatus::DominatorWin : SolveStatus::StallerWin;
}

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOptions {
    std::uint64_t node_budget = 100'000'000;
    // The game ends the moment either winning condition holds; turning the
    // Dominator-side early stop off never changes the value (the board
    // then fills and resolves to the same winner).
    bool early_dominator_stop = true;
    // Restrict root moves to automorphism-orbit representatives. Off by
    // default; cross-checked against the unpruned solver in tests.
    bool root_symmetry_pruning = false;
    // Evaluate root moves in parallel (each subtree gets its own memo
    // table). The combined result is identical to sequential evaluation.
    int threads = 1;
};

// Decides the winner of the biased game on g under optimal play. The
// winner of a position depends only on (dom, sta, side to move), which is
// the memo key; move order never affects the result.
class Solver {
public:
    Solver(Graph g, int dominator_bias, int staller_bias, SolverOptions options = {});

    // Winner from the empty board with the given first player, or
    // Undecided if the node budget ran out.
    SolveStatus solve(Player starter);

    // Winner from an arbitrary (legal) position.
    SolveStatus winner_from(const GameState& state);

    std::uint64_t nodes_visited() const { return nodes_; }
    const Graph& graph() const { return g_; }
    const SolverOptions& options() const { return opt_; }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
            std::uint64_t x = k.first * 0x9e3779b97f4a7c15ull ^ k.second;
            x ^= x >> 30;
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 27;
            x *= 0x94d049bb133111ebull;
            x ^= x >> 31;
            return static_cast<std::size_t>(x);
        }
    };
    using Memo = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::uint8_t, KeyHash>;

    Player search(VertexSet dom, VertexSet sta, Player mover);
    SolveStatus solve_root_split(Player starter);

    Graph g_;
    GameConfig cfg_;
    SolverOptions opt_;
    std::uint64_t nodes_ = 0;
    Memo memo_[2];
};

// One-call convenience wrapper.
SolveStatus solve_game(const Graph& g, const GameConfig& cfg, const SolverOptions& options = {});

// Plain recursive evaluator with no memoization, no early stops beyond the
// win conditions, and its own move generation. Used as an independent
// check on the solver; exponential, so keep it to small boards.
Player reference_winner(const Graph& g, const GameConfig& cfg);

}  // namespace mbd
