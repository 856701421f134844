// Command-line surface for the biased Maker-Breaker domination game
// toolkit: family generators, the exact solver, threshold and invariant
// queries, strategy matches, and the claim-verification battery.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mbd/battery.hpp"
#include "mbd/enumeration.hpp"
#include "mbd/generators.hpp"
#include "mbd/graph_io.hpp"
#include "mbd/invariants.hpp"
#include "mbd/local_domination.hpp"
#include "mbd/solver.hpp"
#include "mbd/star_partition.hpp"
#include "mbd/strategies.hpp"
#include "mbd/thresholds.hpp"

namespace {

// Exit codes beyond 0/1: distinct failure classes callers can branch on.
constexpr int kExitCheckFailure = 1;
constexpr int kExitBudgetSkips = 3;
constexpr int kExitBadGraph = 10;
constexpr int kExitInapplicable = 11;
constexpr int kExitBudget = 12;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MBD_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100'000'000ull;
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        return static_cast<bool>(ls >> b);
    }
    return false;
}

mbd::Graph read_graph_arg(const std::string& arg) {
    std::string text = arg;
    std::ifstream file(arg);
    if (file.good()) {
        std::stringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    if (looks_like_edge_list(text)) return mbd::parse_edge_list(text);
    // Trim to the first token for inline graph6.
    std::istringstream in(text);
    std::string token;
    in >> token;
    return mbd::parse_graph6(token);
}

mbd::Player parse_starter(const std::string& s) {
    if (s == "D" || s == "d") return mbd::Player::Dominator;
    if (s == "S" || s == "s") return mbd::Player::Staller;
    throw CLI::ValidationError("--starter", "expected D or S");
}

void print_graph(const mbd::Graph& g, const std::string& format) {
    if (format == "graph6") {
        std::cout << mbd::write_graph6(g) << "\n";
    } else if (format == "edges") {
        std::cout << mbd::write_edge_list(g);
    } else {
        nlohmann::ordered_json j;
        j["n"] = g.n();
        j["edges"] = nlohmann::ordered_json::array();
        for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
        j["graph6"] = mbd::write_graph6(g);
        std::cout << j.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biased Maker-Breaker domination game toolkit"};
    app.require_subcommand(1);

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "emit a canonical family instance");
    std::string family;
    std::vector<int> params;
    std::string format = "graph6";
    gen->add_option("family", family,
                    "path|cycle|complete|star|biclique|grid|clique-chain|cycle-clique|chorded-path|"
                    "trees|census")
        ->required();
    gen->add_option("params", params, "integer parameters of the family");
    gen->add_option("--format", format, "graph6|edges|json")->check(CLI::IsMember({"graph6", "edges", "json"}));

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "decide the winner under optimal play");
    std::string solve_graph, solve_starter = "D";
    int solve_a = 1, solve_b = 1, solve_threads = 1;
    std::uint64_t solve_budget = default_budget();
    bool solve_symmetry = false;
    solve->add_option("graph", solve_graph, "file path or inline graph6")->required();
    solve->add_option("--a", solve_a, "Dominator bias")->required();
    solve->add_option("--b", solve_b, "Staller bias")->required();
    solve->add_option("--starter", solve_starter, "D|S")->required();
    solve->add_option("--budget", solve_budget, "node budget");
    solve->add_option("--threads", solve_threads, "root-parallel workers");
    solve->add_flag("--symmetry", solve_symmetry, "root automorphism-orbit pruning");

    // ---- threshold ----
    auto* thr = app.add_subcommand("threshold", "bias thresholds");
    std::string thr_graph, thr_kind;
    int thr_index = 0, thr_table = 0;
    std::uint64_t thr_budget = default_budget();
    thr->add_option("graph", thr_graph, "file path or inline graph6")->required();
    thr->add_option("--kind", thr_kind, "a|a'|b|b'");
    thr->add_option("--index", thr_index, "opposing bias index");
    thr->add_option("--table", thr_table, "emit all four thresholds for indices 1..N");
    thr->add_option("--budget", thr_budget, "node budget");

    // ---- invariant ----
    auto* inv = app.add_subcommand("invariant", "graph invariants");
    std::string inv_graph, inv_name;
    inv->add_option("graph", inv_graph, "file path or inline graph6")->required();
    inv->add_option("--name", inv_name, "gamma|nu|tau|alpha|delta|Delta|ltilde:<l>|sigma|lexstar")
        ->required();

    // ---- match ----
    auto* match = app.add_subcommand("match", "play two strategies against each other");
    std::string match_graph, match_starter = "D", dstrat, sstrat, transcript_path, base_graph_arg;
    int match_a = 1, match_b = 1;
    std::uint64_t match_budget = default_budget();
    match->add_option("graph", match_graph, "file path or inline graph6")->required();
    match->add_option("--a", match_a, "Dominator bias")->required();
    match->add_option("--b", match_b, "Staller bias")->required();
    match->add_option("--starter", match_starter, "D|S")->required();
    match->add_option("--dstrat", dstrat, "Dominator strategy name[:params]")->required();
    match->add_option("--sstrat", sstrat, "Staller strategy name[:params]")->required();
    match->add_option("--transcript", transcript_path, "write the text transcript here");
    match->add_option("--base-graph", base_graph_arg, "base graph for line-graph strategies");
    match->add_option("--budget", match_budget, "node budget for solver-backed strategies");

    // ---- verify-paper ----
    auto* verify = app.add_subcommand("verify-paper", "run the desk-scale claim battery");
    std::string suite = "full", json_out;
    int jobs = 1;
    bool no_timing = false;
    std::uint64_t verify_budget = default_budget();
    verify->add_option("--suite", suite, "quick|full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--json", json_out, "write the JSON report to this file");
    verify->add_option("--jobs", jobs, "criterion groups evaluated in parallel");
    verify->add_flag("--no-timing", no_timing, "omit wall-time fields for byte-identical output");
    verify->add_option("--budget", verify_budget, "default per-check node budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto need = [&](std::size_t k) {
                if (params.size() != k)
                    throw CLI::ValidationError("params", family + " needs " + std::to_string(k) +
                                                             " parameter(s)");
            };
            if (family == "path") {
                need(1);
                print_graph(mbd::path_graph(params[0]), format);
            } else if (family == "cycle") {
                need(1);
                print_graph(mbd::cycle_graph(params[0]), format);
            } else if (family == "complete") {
                need(1);
                print_graph(mbd::complete_graph(params[0]), format);
            } else if (family == "star") {
                need(1);
                print_graph(mbd::star_graph(params[0]), format);
            } else if (family == "biclique") {
                need(2);
                print_graph(mbd::complete_bipartite_graph(params[0], params[1]), format);
            } else if (family == "grid") {
                need(2);
                print_graph(mbd::grid_graph(params[0], params[1]), format);
            } else if (family == "clique-chain") {
                need(2);
                print_graph(mbd::clique_chain(params[0], params[1]), format);
            } else if (family == "cycle-clique") {
                need(2);
                if (auto note = mbd::cycle_complete_parameter_note(params[0], params[1]))
                    std::cerr << "note: " << *note << "\n";
                print_graph(mbd::cycle_complete_product(params[0], params[1]), format);
            } else if (family == "chorded-path") {
                need(1);
                print_graph(mbd::chorded_odd_path(params[0]), format);
            } else if (family == "trees") {
                need(1);
                for (const auto& t : mbd::enumerate_trees(params[0])) print_graph(t, format);
            } else if (family == "census") {
                need(1);
                for (const auto& g : mbd::enumerate_connected_graphs(params[0])) print_graph(g, format);
            } else {
                throw CLI::ValidationError("family", "unknown family '" + family + "'");
            }
            return 0;
        }

        if (*solve) {
            mbd::Graph g = read_graph_arg(solve_graph);
            mbd::SolverOptions opt;
            opt.node_budget = solve_budget;
            opt.threads = solve_threads;
            opt.root_symmetry_pruning = solve_symmetry;
            mbd::Solver solver(g, solve_a, solve_b, opt);
            mbd::SolveStatus r = solver.solve(parse_starter(solve_starter));
            if (r == mbd::SolveStatus::Undecided) {
                std::cout << "undecided: resource\n";
                return kExitBudget;
            }
            std::cout << (r == mbd::SolveStatus::DominatorWin ? "D" : "S") << "\n";
            return 0;
        }

        if (*thr) {
            mbd::Graph g = read_graph_arg(thr_graph);
            mbd::SolverOptions opt;
            opt.node_budget = thr_budget;
            if (thr_table > 0) {
                std::cout << mbd::threshold_table(g, thr_table, opt).to_json() << "\n";
                return 0;
            }
            if (thr_kind.empty() || thr_index < 1)
                throw CLI::ValidationError("threshold", "need --kind and --index, or --table N");
            mbd::ThresholdValue v;
            if (thr_kind == "a")
                v = mbd::dominator_threshold(g, thr_index, mbd::Player::Dominator, opt);
            else if (thr_kind == "a'")
                v = mbd::dominator_threshold(g, thr_index, mbd::Player::Staller, opt);
            else if (thr_kind == "b")
                v = mbd::staller_threshold(g, thr_index, mbd::Player::Dominator, opt);
            else if (thr_kind == "b'")
                v = mbd::staller_threshold(g, thr_index, mbd::Player::Staller, opt);
            else
                throw CLI::ValidationError("--kind", "expected a|a'|b|b'");
            std::cout << v.to_string() << "\n";
            return v.is_undecided() ? kExitBudget : 0;
        }

        if (*inv) {
            mbd::Graph g = read_graph_arg(inv_graph);
            if (inv_name == "gamma")
                std::cout << mbd::domination_number(g) << "\n";
            else if (inv_name == "nu")
                std::cout << mbd::matching_number(g) << "\n";
            else if (inv_name == "tau")
                std::cout << mbd::vertex_cover_number(g) << "\n";
            else if (inv_name == "alpha")
                std::cout << mbd::independence_number(g) << "\n";
            else if (inv_name == "delta")
                std::cout << mbd::min_degree(g) << "\n";
            else if (inv_name == "Delta")
                std::cout << mbd::max_degree(g) << "\n";
            else if (inv_name.rfind("ltilde:", 0) == 0)
                std::cout << mbd::local_domination_number(g, std::stoi(inv_name.substr(7))) << "\n";
            else if (inv_name == "sigma")
                std::cout << mbd::star_partition_width(g).to_string() << "\n";
            else if (inv_name == "lexstar")
                std::cout << mbd::lex_optimal_star_partition(g).to_json() << "\n";
            else
                throw CLI::ValidationError("--name", "unknown invariant '" + inv_name + "'");
            return 0;
        }

        if (*match) {
            mbd::Graph g = read_graph_arg(match_graph);
            mbd::GameConfig cfg{match_a, match_b, parse_starter(match_starter)};
            std::unique_ptr<mbd::Graph> base;
            if (!base_graph_arg.empty()) base = std::make_unique<mbd::Graph>(read_graph_arg(base_graph_arg));
            auto ds = mbd::create_strategy(dstrat, base.get());
            auto ss = mbd::create_strategy(sstrat, base.get());
            mbd::MatchResult r = mbd::play_match(g, cfg, *ds, *ss);
            if (!transcript_path.empty()) {
                std::ofstream out(transcript_path);
                out << r.transcript.to_text();
            }
            std::cout << r.transcript.to_json() << "\n";
            return 0;
        }

        if (*verify) {
            mbd::BatteryOptions opt;
            opt.suite = suite;
            opt.default_node_budget = verify_budget;
            opt.include_timing = !no_timing;
            opt.jobs = jobs;
            mbd::BatteryReport report = mbd::run_battery(opt, &std::cerr);
            std::string json = report.to_json(opt.include_timing);
            if (json_out.empty()) {
                std::cout << json << "\n";
            } else {
                std::ofstream out(json_out);
                out << json << "\n";
                std::cerr << report.summary_line() << "\n";
            }
            if (!report.all_passed()) return kExitCheckFailure;
            if (report.any_skipped()) return kExitBudgetSkips;
            return 0;
        }
    } catch (const mbd::GraphFormatError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return kExitBadGraph;
    } catch (const mbd::ApplicabilityError& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const mbd::BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
