#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "mbd/game.hpp"
#include "mbd/solver.hpp"

namespace mbd {

// Strategy preconditions (wrong role, bias, game form, or graph shape).
class ApplicabilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A strategy returned an illegal move; what() names the strategy and move.
class StrategyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deterministic policy for one side of a match. start() checks
// applicability and resets any internal bookkeeping; choose() must return
// a legal move for the side to move.
class Strategy {
public:
    virtual ~Strategy() = default;
    virtual std::string name() const = 0;
    virtual void start(const Graph& g, const GameConfig& cfg, Player role) = 0;
    virtual VertexSet choose(const Graph& g, const GameConfig& cfg, const GameState& state) = 0;
};

struct MatchResult {
    MatchTranscript transcript;
    Player winner = Player::Dominator;
};

// Runs a full game between the two strategies, validating every move.
MatchResult play_match(const Graph& g, const GameConfig& cfg, Strategy& dominator,
                       Strategy& staller);

// Lexicographically first winning claim for Staller: smallest v whose
// remaining closed neighborhood is entirely unplayed and fits in `bias`
// vertices. The returned set is not padded.
std::optional<VertexSet> staller_immediate_win(const Graph& g, const GameState& s, int bias);

// Smallest (then lexicographically first) set of at most `bias` unplayed
// vertices completing a dominating set for Dominator. Not padded.
std::optional<VertexSet> dominator_completion(const Graph& g, const GameState& s, int bias);

// Extends `move` with lexicographically first unplayed vertices until it
// has exactly `size` vertices.
VertexSet pad_move(const Graph& g, const GameState& s, VertexSet move, int size);

// Optimal play backed by the exact solver: picks the lexicographically
// first move whose position is winning for the owner, else the
// lexicographically first move. Throws BudgetExceeded when the solver
// runs out of nodes.
std::unique_ptr<Strategy> make_best_response(SolverOptions options = {});

// Plays the lexicographically first legal move; a deliberately weak
// opponent for sanity runs.
std::unique_ptr<Strategy> make_first_move_strategy();

}  // namespace mbd
