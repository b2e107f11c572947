// Microbenchmarks for the hot paths: kernel row construction, path
// transforms, group exponentials and fusion counting.
//
// Run: build/benchmarks/alcove_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "alcove/affine.hpp"
#include "alcove/fusion.hpp"
#include "alcove/pitman.hpp"
#include "alcove/rng.hpp"
#include "alcove/sl2.hpp"
#include "alcove/su2.hpp"

namespace {

using namespace alcove;

void BM_CharSeries(benchmark::State& state) {
    const double a = 2.0 / static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(affine::char_ratio(3, 1, a));
}
BENCHMARK(BM_CharSeries)->Arg(10)->Arg(100)->Arg(1000);

void BM_ChainKernelRow(benchmark::State& state) {
    const double a = 2.0 / 100.0;
    for (auto _ : state) {
        affine::ChainSimulator sim(a);   // cold cache each iteration
        benchmark::DoNotOptimize(sim.row(state.range(0), state.range(0) % 2));
    }
}
BENCHMARK(BM_ChainKernelRow)->Arg(1)->Arg(10)->Arg(50);

void BM_AffineChain(benchmark::State& state) {
    const long long n = state.range(0);
    affine::ChainSimulator sim(2.0 / static_cast<double>(n));
    std::uint64_t i = 0;
    for (auto _ : state) {
        Stream rng = derive_stream(1, {label("bench-chain"), i++});
        benchmark::DoNotOptimize(sim.run(n, rng));
    }
}
BENCHMARK(BM_AffineChain)->Arg(100);

void BM_PitmanTransform(benchmark::State& state) {
    Stream rng = derive_stream(1, {label("bench-pitman")});
    const pitman::Path b = pitman::brownian_path(1.0, 1.0 / state.range(0), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(pitman::pitman_transform(b, 0));
}
BENCHMARK(BM_PitmanTransform)->Arg(1000)->Arg(10000);

void BM_HighestWeightLimit(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        Stream rng = derive_stream(1, {label("bench-hw"), i++});
        const pitman::Path b = pitman::brownian_path(1.0, 1e-3, rng);
        benchmark::DoNotOptimize(pitman::highest_weight_limit(b, 1e-6, 200));
    }
}
BENCHMARK(BM_HighestWeightLimit);

void BM_SheetRadial(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        Stream rng = derive_stream(1, {label("bench-sheet"), i++});
        benchmark::DoNotOptimize(su2::sheet_radial_sample(1.0, 1e-3, rng));
    }
}
BENCHMARK(BM_SheetRadial);

void BM_DoobChain(benchmark::State& state) {
    std::uint64_t i = 0;
    for (auto _ : state) {
        Stream rng = derive_stream(1, {label("bench-doob"), i++});
        benchmark::DoNotOptimize(sl2::simulate_doob_chain(0, state.range(0), 1, 1.0, rng));
    }
}
BENCHMARK(BM_DoobChain)->Arg(200);

void BM_FusionBkf(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fusion::fusion_bkf(3, 4, p, {0, 0, 0}, {0, 0, 0}));
}
BENCHMARK(BM_FusionBkf)->Arg(4)->Arg(8);

void BM_PhiHatGeneral(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(su2::phi_hat_general(1.0, 0.5, 1.0, 0.5));
}
BENCHMARK(BM_PhiHatGeneral);

} // namespace

BENCHMARK_MAIN();
