#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mbd/graph.hpp"

namespace mbd {

enum class CheckStatus : std::uint8_t { Pass, Fail, SkippedBudget, NotApplicable };

std::string to_string(CheckStatus s);

struct BatteryCheck {
    std::string id;        // criterion-scoped identifier, e.g. "c1.path-b1"
    std::string anchor;    // where the claim lives
    std::string instance;  // what was run
    std::string expected;
    std::string observed;
    CheckStatus status = CheckStatus::Fail;
    double millis = 0.0;
};

struct BatteryOptions {
    std::string suite = "full";  // "quick" or "full"
    std::uint64_t default_node_budget = 100'000'000;
    bool include_timing = true;
    int jobs = 1;  // criterion groups evaluated in a worker pool
};

struct BatteryReport {
    std::string suite;
    std::vector<BatteryCheck> checks;

    int count(CheckStatus s) const;
    bool all_passed() const;  // no failures; budget skips are not passes
    bool any_skipped() const { return count(CheckStatus::SkippedBudget) > 0; }
    std::string to_json(bool include_timing) const;
    std::string summary_line() const;
};

// Runs the whole desk-scale claim battery. Progress lines (one per check)
// go to *progress when given.
BatteryReport run_battery(const BatteryOptions& options, std::ostream* progress = nullptr);

// The seven-vertex example graph used by the local domination checks:
// a hub over four spokes whose lower ends are tied into a triangle path.
Graph local_domination_example_graph();

}  // namespace mbd
