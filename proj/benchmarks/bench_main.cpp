#include <benchmark/benchmark.h>

#include <random>

#include "subapprox/angles.hpp"
#include "subapprox/enumeration.hpp"
#include "subapprox/exact_lattice.hpp"
#include "subapprox/metric_geometry.hpp"

using namespace subapprox;

static void BM_EnumeratePluecker(benchmark::State& state) {
    const HeightBudget budget(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_pluecker(budget));
}
BENCHMARK(BM_EnumeratePluecker)->Arg(25)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_CountByHeight(benchmark::State& state) {
    const HeightBudget budget(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_by_height(budget));
}
BENCHMARK(BM_CountByHeight)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Saturate(benchmark::State& state) {
    std::mt19937_64 gen(1);
    std::uniform_int_distribution<long> d(-1000, 1000);
    const auto m = make_matrix({d(gen), d(gen), d(gen), d(gen)}, {d(gen), d(gen), d(gen), d(gen)});
    for (auto _ : state) benchmark::DoNotOptimize(saturate(m));
}
BENCHMARK(BM_Saturate);

static void BM_Psi(benchmark::State& state) {
    std::mt19937_64 gen(2);
    std::normal_distribution<double> n;
    const auto a = orthonormalize({{n(gen), n(gen), n(gen), n(gen)}, {n(gen), n(gen), n(gen), n(gen)}});
    const auto b = orthonormalize({{n(gen), n(gen), n(gen), n(gen)}, {n(gen), n(gen), n(gen), n(gen)}});
    for (auto _ : state) benchmark::DoNotOptimize(psi(a, b));
}
BENCHMARK(BM_Psi);

static void BM_BestApprox(benchmark::State& state) {
    const auto catalog = PlaneCatalog::build(HeightBudget(state.range(0)));
    const auto a = frame_of(GraphChart(ChartLabel(1, 2), Mat2{0.3141592, 0.2718281, 0.5772156, 0.6180339}));
    for (auto _ : state) benchmark::DoNotOptimize(best_approx(a, catalog));
}
BENCHMARK(BM_BestApprox)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_TubeVolume(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tube_volume({}, 2.0, 0.05, static_cast<std::uint64_t>(state.range(0)), 1));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TubeVolume)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
