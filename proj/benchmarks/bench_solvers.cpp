#include <benchmark/benchmark.h>

#include <random>

#include "pathcolor/coloring.hpp"
#include "pathcolor/generators.hpp"
#include "pathcolor/reduction.hpp"
#include "pathcolor/solvers.hpp"

using namespace pathcolor;

static void ChiUmPath(benchmark::State& state) {
    const Graph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chi_um_exact(g).k);
}
BENCHMARK(ChiUmPath)->DenseRange(8, 24, 8)->Unit(benchmark::kMillisecond);

static void ChiUmGrid(benchmark::State& state) {
    const Graph g = grid_graph(static_cast<int>(state.range(0))).first;
    for (auto _ : state) benchmark::DoNotOptimize(chi_um_exact(g).k);
}
BENCHMARK(ChiUmGrid)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void ChiCfPath(benchmark::State& state) {
    const Graph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chi_cf_exact(g).k);
}
BENCHMARK(ChiCfPath)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void ChiCfBinaryTree(benchmark::State& state) {
    const Graph g = complete_binary_tree(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chi_cf_exact(g).k);
}
BENCHMARK(ChiCfBinaryTree)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void VerifyCfHedgehog(benchmark::State& state) {
    const auto [g, layout] = hedgehog(static_cast<int>(state.range(0)));
    const Coloring c = cf_coloring_hedgehog(layout);
    std::uint64_t paths = 0;
    for (auto _ : state) paths = verify_conflict_free(g, c, 10'000'000).paths_examined;
    state.counters["paths"] = static_cast<double>(paths);
}
BENCHMARK(VerifyCfHedgehog)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void VerifyUmGrid(benchmark::State& state) {
    const Graph g = grid_graph(static_cast<int>(state.range(0))).first;
    const Coloring c = chi_um_exact(g).certificate;
    for (auto _ : state) benchmark::DoNotOptimize(verify_unique_maximum(g, c).valid());
}
BENCHMARK(VerifyUmGrid)->DenseRange(2, 4);

static void ReductionEquivalence(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Graph> graphs;
    for (int i = 0; i < 16; ++i) graphs.push_back(random_graph(static_cast<int>(state.range(0)), 0.5, rng));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(check_reduction_equivalence(graphs[i++ % graphs.size()]).agreement);
}
BENCHMARK(ReductionEquivalence)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
