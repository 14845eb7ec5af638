#include <benchmark/benchmark.h>

#include <indcomplex/complex.hpp>
#include <indcomplex/fold.hpp>
#include <indcomplex/homology.hpp>
#include <indcomplex/transfer.hpp>

using namespace indcomplex;

static void BM_TransferSweep(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(euler_sweep(200, k));
}
BENCHMARK(BM_TransferSweep)->Arg(6)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_FaceEnumeration(benchmark::State& state) {
    const Graph g = build_gamma(static_cast<int>(state.range(0)), 6);
    std::uint64_t faces = 0;
    for (auto _ : state) {
        faces = 0;
        for_each_face_mask(g, [&](Mask) { ++faces; });
        benchmark::DoNotOptimize(faces);
    }
    state.counters["faces"] = static_cast<double>(faces);
}
BENCHMARK(BM_FaceEnumeration)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Reduce(benchmark::State& state) {
    const Graph g = build_gamma(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(reduce(g));
}
BENCHMARK(BM_Reduce)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_BettiOverField(benchmark::State& state) {
    const Graph g = build_gamma(static_cast<int>(state.range(0)), 6);
    for (auto _ : state) benchmark::DoNotOptimize(betti_over_field(g, 2));
}
BENCHMARK(BM_BettiOverField)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
