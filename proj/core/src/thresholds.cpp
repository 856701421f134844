#include "mbd/thresholds.hpp"

#include <stdexcept>

#include "mbd/invariants.hpp"
#include "mbd/graph_io.hpp"

#include <nlohmann/json.hpp>

namespace mbd {

bool ThresholdValue::less_or_equal(const ThresholdValue& o) const {
    if (is_undecided() || o.is_undecided())
        throw std::logic_error("comparing an undecided threshold");
    if (is_infinite()) return o.is_infinite();
    if (o.is_infinite()) return true;
    return value <= o.value;
}

std::string ThresholdValue::to_string() const {
    switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::Infinite: return "inf";
        default: return "undecided";
    }
}

namespace {

// Probes solve(g, a, b, starter) for the scan variable running from 1 to
// cap; returns the first value where `wanted` wins.
ThresholdValue scan(const Graph& g, Player wanted, Player starter, int cap, bool scanning_dominator,
                    int other_bias, const SolverOptions& options) {
    for (int x = 1; x <= cap; ++x) {
        int a = scanning_dominator ? x : other_bias;
        int b = scanning_dominator ? other_bias : x;
        Solver solver(g, a, b, options);
        SolveStatus r = solver.solve(starter);
        if (r == SolveStatus::Undecided) return ThresholdValue::undecided();
        if (r == win_status(wanted)) return ThresholdValue::finite(x);
    }
    throw std::logic_error("threshold scan exhausted its theoretical cap");
}

}  // namespace

ThresholdValue dominator_threshold(const Graph& g, int staller_bias, Player starter,
                                   const SolverOptions& options) {
    if (staller_bias < 1) throw std::invalid_argument("staller bias must be positive");
    if (g.n() < 1) throw std::invalid_argument("empty graph");
    if (starter == Player::Dominator) {
        int cap = domination_number(g);  // a move of gamma vertices wins outright
        return scan(g, Player::Dominator, starter, cap, true, staller_bias, options);
    }
    // Staller-start: with bias above the minimum degree she claims a full
    // closed neighborhood on move one whatever a is.
    if (staller_bias >= min_degree(g) + 1) return ThresholdValue::infinite();
    int cap = staller_bias * max_degree(g);
    return scan(g, Player::Dominator, starter, cap, true, staller_bias, options);
}

ThresholdValue staller_threshold(const Graph& g, int dominator_bias, Player starter,
                                 const SolverOptions& options) {
    if (dominator_bias < 1) throw std::invalid_argument("dominator bias must be positive");
    if (g.n() < 1) throw std::invalid_argument("empty graph");
    if (starter == Player::Staller) {
        int cap = min_degree(g) + 1;  // claim a minimum-degree neighborhood
        return scan(g, Player::Staller, starter, cap, false, dominator_bias, options);
    }
    // Dominator-start: an opening bias of gamma claims a dominating set
    // before Staller moves, so no bias ever wins for her.
    if (dominator_bias >= domination_number(g)) return ThresholdValue::infinite();
    int cap = max_degree(g) + 1;
    return scan(g, Player::Staller, starter, cap, false, dominator_bias, options);
}

const ThresholdValue* ThresholdTable::find(const std::string& kind, int index) const {
    for (const auto& c : cells)
        if (c.kind == kind && c.index == index) return &c.value;
    return nullptr;
}

ThresholdTable threshold_table(const Graph& g, int max_index, const SolverOptions& options) {
    if (max_index < 1) throw std::invalid_argument("max_index must be positive");
    ThresholdTable t;
    t.graph6 = write_graph6(g);
    for (int i = 1; i <= max_index; ++i) {
        t.cells.push_back({"a", i, dominator_threshold(g, i, Player::Dominator, options)});
        t.cells.push_back({"a'", i, dominator_threshold(g, i, Player::Staller, options)});
        t.cells.push_back({"b", i, staller_threshold(g, i, Player::Dominator, options)});
        t.cells.push_back({"b'", i, staller_threshold(g, i, Player::Staller, options)});
    }

    auto check_pair = [&](const std::string& name, const ThresholdValue* lo,
                          const ThresholdValue* hi, const std::string& detail) {
        if (!lo || !hi) return;
        if (lo->is_undecided() || hi->is_undecided()) {
            t.checks.push_back({name, true, detail + ": skipped (undecided cell)"});
            return;
        }
        t.checks.push_back({name, lo->less_or_equal(*hi), detail});
    };

    for (int i = 1; i <= max_index; ++i) {
        check_pair("cross-relation a <= a'", t.find("a", i), t.find("a'", i), "index " + std::to_string(i));
        check_pair("cross-relation b' <= b", t.find("b'", i), t.find("b", i), "index " + std::to_string(i));
    }
    // Thresholds are non-decreasing in the opposing bias index.
    for (const char* kind : {"a", "a'", "b", "b'"})
        for (int i = 1; i < max_index; ++i)
            check_pair(std::string("index monotonicity ") + kind, t.find(kind, i), t.find(kind, i + 1),
                       std::string(kind) + "_" + std::to_string(i) + " <= " + kind + "_" +
                           std::to_string(i + 1));
    return t;
}

std::string ThresholdTable::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "mbd-thresholds/1";
    j["graph"] = graph6;
    j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : cells) {
        nlohmann::ordered_json jc;
        jc["kind"] = c.kind;
        jc["index"] = c.index;
        if (c.value.is_finite())
            jc["value"] = c.value.value;
        else
            jc["value"] = c.value.to_string();
        j["cells"].push_back(jc);
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["detail"] = c.detail;
        j["checks"].push_back(jc);
    }
    return j.dump();
}

}  // namespace mbd
