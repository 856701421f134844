#include <benchmark/benchmark.h>

#include "mbd/enumeration.hpp"
#include "mbd/generators.hpp"
#include "mbd/solver.hpp"
#include "mbd/star_partition.hpp"
#include "mbd/thresholds.hpp"

namespace {

void BM_SolvePath11(benchmark::State& state) {
    mbd::Graph g = mbd::path_graph(11);
    for (auto _ : state) {
        mbd::Solver solver(g, 1, 1);
        benchmark::DoNotOptimize(solver.solve(mbd::Player::Dominator));
    }
}
BENCHMARK(BM_SolvePath11);

void BM_SolveGrid53Bias22(benchmark::State& state) {
    mbd::Graph g = mbd::grid_graph(5, 3);
    for (auto _ : state) {
        mbd::Solver solver(g, 2, 2);
        benchmark::DoNotOptimize(solver.solve(mbd::Player::Staller));
    }
}
BENCHMARK(BM_SolveGrid53Bias22);

void BM_SolveLineGraphK6(benchmark::State& state) {
    mbd::Graph g = mbd::line_graph(mbd::complete_graph(6)).first;
    for (auto _ : state) {
        mbd::Solver solver(g, 1, 1);
        benchmark::DoNotOptimize(solver.solve(mbd::Player::Staller));
    }
}
BENCHMARK(BM_SolveLineGraphK6);

void BM_ThresholdTableP7(benchmark::State& state) {
    mbd::Graph g = mbd::path_graph(7);
    for (auto _ : state) benchmark::DoNotOptimize(mbd::threshold_table(g, 2));
}
BENCHMARK(BM_ThresholdTableP7);

void BM_ConnectedCensus7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mbd::enumerate_connected_graphs(7));
}
BENCHMARK(BM_ConnectedCensus7);

void BM_TreeEnumeration10(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mbd::enumerate_trees(10));
}
BENCHMARK(BM_TreeEnumeration10);

void BM_LexStarPartitionGrid42(benchmark::State& state) {
    mbd::Graph g = mbd::grid_graph(4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mbd::lex_optimal_star_partition(g));
}
BENCHMARK(BM_LexStarPartitionGrid42);

}  // namespace

BENCHMARK_MAIN();
