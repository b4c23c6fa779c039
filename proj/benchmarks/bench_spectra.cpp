#include <benchmark/benchmark.h>

#include "spectra/bounds.hpp"
#include "spectra/montecarlo.hpp"

using namespace spectra;

static void BM_JointSpectrumEnumeration(benchmark::State& state) {
    const long n = state.range(0);
    Rng rng(1);
    LinearCodeMatrix code = sample_rlc(2, n, n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(joint_spectrum_of_map(code.generator()));
}
BENCHMARK(BM_JointSpectrumEnumeration)->Arg(6)->Arg(10)->Arg(14);

static void BM_Rank(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    LinearCodeMatrix code = sample_rlc(2, static_cast<long>(n), static_cast<long>(n), rng);
    for (auto _ : state) benchmark::DoNotOptimize(code.generator().rank());
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(32)->Arg(128);

static void BM_GenPolyPow(benchmark::State& state) {
    GenPoly base = expected_chk_genfun(3, 4);
    const long e = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(base.pow(e));
}
BENCHMARK(BM_GenPolyPow)->Arg(2)->Arg(3)->Arg(4);

static void BM_ExpectedChkSpectrum(benchmark::State& state) {
    const long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(expected_chk_parallel_joint(3, 2, m));
}
BENCHMARK(BM_ExpectedChkSpectrum)->Arg(1)->Arg(2)->Arg(3);

static void BM_DeltaD(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(delta_d(3, d, 0.4, 0.6));
}
BENCHMARK(BM_DeltaD)->Arg(2)->Arg(8)->Arg(32);

static void BM_RankRateMc(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_rank_rate(2, 8, 8, state.range(0), 3));
}
BENCHMARK(BM_RankRateMc)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
