#include <benchmark/benchmark.h>

#include "pathcolor/games.hpp"
#include "pathcolor/generators.hpp"

using namespace pathcolor;

static void VcsGrid(benchmark::State& state) {
    const Graph g = grid_graph(static_cast<int>(state.range(0))).first;
    for (auto _ : state) benchmark::DoNotOptimize(vcs_value(g));
}
BENCHMARK(VcsGrid)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void VpBinaryTree(benchmark::State& state) {
    const Graph g = complete_binary_tree(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(vp_value(g).value);
}
BENCHMARK(VpBinaryTree)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void VpGrid(benchmark::State& state) {
    const Graph g = grid_graph(static_cast<int>(state.range(0))).first;
    for (auto _ : state) benchmark::DoNotOptimize(vp_value(g).value);
}
BENCHMARK(VpGrid)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void TranslatedAgainstAllReplies(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const Graph g = grid_graph(m).first;
    const TranslatedMaximizer max(m);
    for (auto _ : state) benchmark::DoNotOptimize(min_length_against_all(g, GameKind::path, max));
}
BENCHMARK(TranslatedAgainstAllReplies)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
