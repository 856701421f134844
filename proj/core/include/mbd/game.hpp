#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

enum class Player : std::uint8_t { Dominator = 0, Staller = 1 };

inline Player opponent(Player p) {
    return p == Player::Dominator ? Player::Staller : Player::Dominator;
}
inline char player_char(Player p) { return p == Player::Dominator ? 'D' : 'S'; }

// Per-move vertex counts and who opens. The game with dominator_bias = a
// and staller_bias = b started by `starter` is the (a,b)-biased game.
struct GameConfig {
    int dominator_bias = 1;
    int staller_bias = 1;
    Player starter = Player::Dominator;

    int bias_of(Player p) const { return p == Player::Dominator ? dominator_bias : staller_bias; }
    bool valid() const { return dominator_bias >= 1 && staller_bias >= 1; }
};

struct GameState {
    VertexSet dom;  // Dominator's claimed vertices
    VertexSet sta;  // Staller's claimed vertices
    Player to_move = Player::Dominator;

    VertexSet played() const { return dom | sta; }
    VertexSet claimed(Player p) const { return p == Player::Dominator ? dom : sta; }
};

GameState initial_state(const GameConfig& cfg);

inline VertexSet unplayed_vertices(const Graph& g, const GameState& s) {
    return g.vertices() - s.played();
}

// A player short of their bias takes every remaining vertex.
int required_move_size(const Graph& g, const GameState& s, const GameConfig& cfg);

// True iff some closed neighborhood is entirely Staller's.
bool staller_has_won(const Graph& g, const GameState& s);

// True iff Dominator's vertices dominate the whole graph.
bool dominator_has_won(const Graph& g, const GameState& s);

// Staller's win is checked first; on a full board with no Staller claim
// the Dominator set necessarily dominates (complement argument), so the
// game always resolves.
std::optional<Player> is_terminal(const Graph& g, const GameState& s);

// Every legal move of the side to move, lexicographically smallest vertex
// set first. Throws std::logic_error on a terminal state.
std::vector<VertexSet> legal_moves(const Graph& g, const GameState& s, const GameConfig& cfg);

// Throws std::invalid_argument on overlap or wrong cardinality.
GameState apply_move(const Graph& g, const GameState& s, const GameConfig& cfg, VertexSet move);

struct MatchTranscript {
    struct Move {
        Player player;
        VertexSet vertices;
    };
    std::vector<Move> moves;
    Player result = Player::Dominator;

    // One move per line ("D {0,3}" / "S {5}"), final line "RESULT D|S".
    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace mbd
