#include <benchmark/benchmark.h>

#include "spectra/colouring.hpp"
#include "spectra/divisor_stats.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/fset.hpp"
#include "spectra/homogeneity.hpp"
#include "spectra/induced_sizes.hpp"
#include "spectra/search.hpp"

using namespace spectra;

static void BM_FSetSmallRainbow(benchmark::State& state) {
    const auto c = small_rainbow(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(f_set(c).size());
}
BENCHMARK(BM_FSetSmallRainbow)->DenseRange(4, 8)->Unit(benchmark::kMicrosecond);

static void BM_FSetBipartite(benchmark::State& state) {
    const auto c = bipartite_rainbow(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(f_set(c).size());
}
BENCHMARK(BM_FSetBipartite)->Args({4, 4})->Args({5, 6})->Unit(benchmark::kMicrosecond);

static void BM_EnumerateClasses(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        const auto stats = enumerate_templates(t, k, true, nullptr);
        benchmark::DoNotOptimize(stats.emitted);
    }
}
BENCHMARK(BM_EnumerateClasses)
    ->Args({4, 5})
    ->Args({4, 7})
    ->Args({5, 6})
    ->Args({5, 8})
    ->Unit(benchmark::kMillisecond);

static void BM_LawReport(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto rep = law_report(4, 7, workers);
        benchmark::DoNotOptimize(rep.classes_total());
    }
}
BENCHMARK(BM_LawReport)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BuildHomogeneous(benchmark::State& state) {
    const auto c = small_rainbow(static_cast<int>(state.range(0)));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_homogeneous(c, n).size());
}
BENCHMARK(BM_BuildHomogeneous)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_HCountSieve(benchmark::State& state) {
    const long long x = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(h_count(x, Rat(100), Rat(200)));
}
BENCHMARK(BM_HCountSieve)->Arg(100000)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_MultTable(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(mult_table_size(n));
}
BENCHMARK(BM_MultTable)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_DensitySieve(benchmark::State& state) {
    const long long x = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(density_A(x).count);
}
BENCHMARK(BM_DensitySieve)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_InducedSizeSet(benchmark::State& state) {
    const auto g = SimpleGraph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(induced_size_set(g).size());
}
BENCHMARK(BM_InducedSizeSet)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_GraphEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        int count = 0;
        for_each_graph(n, [&](const SimpleGraph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_GraphEnumeration)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
