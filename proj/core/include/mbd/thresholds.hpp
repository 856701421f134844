#pragma once

#include <string>
#include <vector>

#include "mbd/solver.hpp"

namespace mbd {

// A bias threshold: a positive integer, infinity (no finite bias works),
// or undecided (solver budget ran out mid-scan).
struct ThresholdValue {
    enum class Kind : std::uint8_t { Finite, Infinite, Undecided };
    Kind kind = Kind::Undecided;
    int value = 0;

    static ThresholdValue finite(int v) { return {Kind::Finite, v}; }
    static ThresholdValue infinite() { return {Kind::Infinite, 0}; }
    static ThresholdValue undecided() { return {Kind::Undecided, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_undecided() const { return kind == Kind::Undecided; }
    bool operator==(const ThresholdValue&) const = default;

    // Infinity compares greater than every integer; undecided values are
    // incomparable and must not reach here.
    bool less_or_equal(const ThresholdValue& o) const;
    std::string to_string() const;
};

// Smallest Dominator bias a with a win at Staller bias `staller_bias`,
// for the given first player. The scan is linear from a = 1 (the winner
// is monotone in a); it is capped by the domination number in the
// Dominator-start game and by staller_bias * max_degree in the
// Staller-start game, and the Staller-start game is infinite outright
// once staller_bias > min_degree.
ThresholdValue dominator_threshold(const Graph& g, int staller_bias, Player starter,
                                   const SolverOptions& options = {});

// Smallest Staller bias b with a win at Dominator bias `dominator_bias`.
// Caps: min_degree + 1 in the Staller-start game always; max_degree + 1
// in the Dominator-start game when dominator_bias < gamma, and infinite
// outright once dominator_bias >= gamma.
ThresholdValue staller_threshold(const Graph& g, int dominator_bias, Player starter,
                                 const SolverOptions& options = {});

struct ThresholdCell {
    std::string kind;  // "a", "a'", "b", "b'"
    int index = 0;
    ThresholdValue value;
};

struct ThresholdCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ThresholdTable {
    std::string graph6;
    std::vector<ThresholdCell> cells;
    std::vector<ThresholdCheck> checks;

    const ThresholdValue* find(const std::string& kind, int index) const;
    std::string to_json() const;
};

// All four thresholds for indices 1..max_index plus the consistency
// checks run on the finished table (cross relations and index
// monotonicity). Budget exhaustion yields undecided cells, not failures.
ThresholdTable threshold_table(const Graph& g, int max_index, const SolverOptions& options = {});

}  // namespace mbd
