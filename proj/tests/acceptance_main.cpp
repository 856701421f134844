// Acceptance suite: runs the full claim battery and prints one line per
// criterion plus a per-check breakdown. Exits nonzero on any failure.

#include <cstring>
#include <iostream>
#include <map>

#include "mbd/battery.hpp"

int main(int argc, char** argv) {
    mbd::BatteryOptions opt;
    opt.suite = "full";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.suite = "quick";
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) opt.jobs = std::atoi(argv[++i]);
    }

    mbd::BatteryReport report = mbd::run_battery(opt, nullptr);

    // Checks are prefixed c1..c12 after the numbered criteria.
    std::map<std::string, std::pair<int, int>> per_criterion;  // id prefix -> {pass-ish, total}
    for (const auto& c : report.checks) {
        std::string prefix = c.id.substr(0, c.id.find('.'));
        auto& slot = per_criterion[prefix];
        ++slot.second;
        bool ok = c.status == mbd::CheckStatus::Pass || c.status == mbd::CheckStatus::NotApplicable;
        if (ok) ++slot.first;
        std::cout << "  [" << mbd::to_string(c.status) << "] " << c.id << " (" << c.instance
                  << "): " << c.observed << "\n";
    }
    std::cout << "\n";
    for (int i = 1; i <= 12; ++i) {
        std::string key = "c" + std::to_string(i);
        auto it = per_criterion.find(key);
        if (it == per_criterion.end()) {
            std::cout << "criterion " << i << ": MISSING\n";
            continue;
        }
        bool ok = it->second.first == it->second.second;
        std::cout << "criterion " << i << ": " << (ok ? "PASS" : "FAIL") << " (" << it->second.first
                  << "/" << it->second.second << " checks)\n";
    }
    std::cout << "\nsummary: " << report.summary_line() << "\n";

    if (!report.all_passed()) return 1;
    if (report.any_skipped()) return 3;
    return 0;
}
