#include "mbd/game.hpp"

#include <stdexcept>

namespace mbd {

GameState initial_state(const GameConfig& cfg) {
    if (!cfg.valid()) throw std::invalid_argument("biases must be positive");
    return GameState{VertexSet{}, VertexSet{}, cfg.starter};
}

int required_move_size(const Graph& g, const GameState& s, const GameConfig& cfg) {
    int unplayed = unplayed_vertices(g, s).count();
    return std::min(cfg.bias_of(s.to_move), unplayed);
}

bool staller_has_won(const Graph& g, const GameState& s) {
    for (int v = 0; v < g.n(); ++v)
        if (g.closed_neighborhood(v).subset_of(s.sta)) return true;
    return false;
}

bool dominator_has_won(const Graph& g, const GameState& s) {
    VertexSet covered;
    for (int v : s.dom) covered |= g.closed_neighborhood(v);
    return covered == g.vertices();
}

std::optional<Player> is_terminal(const Graph& g, const GameState& s) {
    if (staller_has_won(g, s)) return Player::Staller;
    if (dominator_has_won(g, s)) return Player::Dominator;
    if (unplayed_vertices(g, s).empty()) return Player::Dominator;
    return std::nullopt;
}

std::vector<VertexSet> legal_moves(const Graph& g, const GameState& s, const GameConfig& cfg) {
    // Unavailable once Staller has claimed a neighborhood or the board is
    // full; a position where only Dominator's early win holds still
    // enumerates (the outcome is settled but the moves exist).
    if (staller_has_won(g, s) || unplayed_vertices(g, s).empty())
        throw std::logic_error("legal_moves called on a terminal state");
    VertexSet pool = unplayed_vertices(g, s);
    int k = std::min(cfg.bias_of(s.to_move), pool.count());
    std::vector<VertexSet> out;
    for_each_subset_of_size(pool, k, [&](VertexSet m) {
        out.push_back(m);
        return false;
    });
    return out;
}

GameState apply_move(const Graph& g, const GameState& s, const GameConfig& cfg, VertexSet move) {
    if (!move.subset_of(unplayed_vertices(g, s)))
        throw std::invalid_argument("move " + move.to_string() + " uses played or out-of-range vertices");
    if (move.count() != required_move_size(g, s, cfg))
        throw std::invalid_argument("move " + move.to_string() + " has wrong cardinality (expected " +
                                    std::to_string(required_move_size(g, s, cfg)) + ")");
    GameState next = s;
    if (s.to_move == Player::Dominator)
        next.dom |= move;
    else
        next.sta |= move;
    next.to_move = opponent(s.to_move);
    return next;
}

std::string MatchTranscript::to_text() const {
    std::string out;
    for (const auto& m : moves) {
        out += player_char(m.player);
        out += ' ';
        out += m.vertices.to_string();
        out += '\n';
    }
    out += "RESULT ";
    out += player_char(result);
    out += '\n';
    return out;
}

std::string MatchTranscript::to_json() const {
    std::string out = "{\"moves\":[";
    for (std::size_t i = 0; i < moves.size(); ++i) {
        if (i) out += ',';
        out += "{\"player\":\"";
        out += player_char(moves[i].player);
        out += "\",\"vertices\":[";
        bool fst = true;
        for (int v : moves[i].vertices) {
            if (!fst) out += ',';
            out += std::to_string(v);
            fst = false;
        }
        out += "]}";
    }
    out += "],\"result\":\"";
    out += player_char(result);
    out += "\"}";
    return out;
}

}  // namespace mbd
