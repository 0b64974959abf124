#include <benchmark/benchmark.h>

#include "fcc/decomp.hpp"
#include "fcc/generate.hpp"
#include "fcc/oracle.hpp"
#include "fcc/solver_td.hpp"
#include "fcc/solver_tw.hpp"
#include "fcc/solver_vc.hpp"

namespace {

using namespace fcc;

ColoredInstance demo_fair() {
    std::vector<std::pair<int, int>> edges = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                              {2, 5}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                              {6, 8}, {7, 8}, {8, 9}};
    return ColoredInstance::create(9, edges, {1, 1, 1, 2, 2, 1, 2, 1, 1}, 2);
}

void BM_OracleDemo(benchmark::State& state) {
    auto g = demo_fair();
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(g).cost);
}
BENCHMARK(BM_OracleDemo);

void BM_SolveVcDemo(benchmark::State& state) {
    auto g = demo_fair();
    for (auto _ : state) benchmark::DoNotOptimize(solve_vc(g).cost);
}
BENCHMARK(BM_SolveVcDemo);

void BM_SolveTwXpDemo(benchmark::State& state) {
    auto g = demo_fair();
    auto nice = to_nice(tree_decomposition(g, DecompMode::Exact), g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_tw_xp(g, nice).cost);
}
BENCHMARK(BM_SolveTwXpDemo);

void BM_SolveTdDemo(benchmark::State& state) {
    auto g = demo_fair();
    for (auto _ : state) benchmark::DoNotOptimize(solve_td(g).cost);
}
BENCHMARK(BM_SolveTdDemo);

void BM_ExactTreewidth(benchmark::State& state) {
    auto g = generate({Family::Gnp, static_cast<int>(state.range(0)), 0.3, 2, {1},
                       1234});
    for (auto _ : state)
        benchmark::DoNotOptimize(tree_decomposition(g, DecompMode::Exact).width());
}
BENCHMARK(BM_ExactTreewidth)->Arg(8)->Arg(10)->Arg(12);

void BM_ExactTreedepth(benchmark::State& state) {
    auto g = generate({Family::Gnp, static_cast<int>(state.range(0)), 0.3, 2, {1},
                       1234});
    for (auto _ : state)
        benchmark::DoNotOptimize(treedepth_forest(g, DecompMode::Exact).height);
}
BENCHMARK(BM_ExactTreedepth)->Arg(8)->Arg(10)->Arg(12);

void BM_OracleEnumeration(benchmark::State& state) {
    auto g = generate({Family::Gnp, static_cast<int>(state.range(0)), 0.4, 2, {1, 1},
                       99});
    OracleParams p;
    for (auto _ : state) {
        long long count = 0;
        enumerate_fair_clusterings(g, p, [&](const Clustering&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_OracleEnumeration)->Arg(8)->Arg(10);

void BM_FptTwoOnTree(benchmark::State& state) {
    auto g = generate({Family::Tree, static_cast<int>(state.range(0)), 0.5, 2, {1, 1},
                       77});
    auto nice = to_nice(tree_decomposition(g, DecompMode::Heuristic), g);
    for (auto _ : state) benchmark::DoNotOptimize(solve_tw_fpt2(g, nice).cost);
}
BENCHMARK(BM_FptTwoOnTree)->Arg(10)->Arg(14)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
