#include "jetbounds/annex.hpp"
#include "jetbounds/bounds.hpp"
#include "jetbounds/jet_coefficients.hpp"
#include "jetbounds/morse.hpp"

#include <benchmark/benchmark.h>

using namespace jetbounds;

static void BM_MorsePolynomial(benchmark::State& state)
{
    const unsigned n = static_cast<unsigned>(state.range(0));
    const JetParams params = JetParams::headline(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(morse_polynomial(params));
}
BENCHMARK(BM_MorsePolynomial)->DenseRange(2, 8);

static void BM_ComputeB(benchmark::State& state)
{
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_B(n, n));
}
BENCHMARK(BM_ComputeB)->DenseRange(2, 10);

static void BM_LemmaChain(benchmark::State& state)
{
    const unsigned n = static_cast<unsigned>(state.range(0));
    const JetParams params = JetParams::headline(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_lemma_chain(params));
}
BENCHMARK(BM_LemmaChain)->DenseRange(2, 6);

static void BM_WhitneyVerify(benchmark::State& state)
{
    const WeightedSplitBundle bundle{3, {2, -1, 1}, {1, 2, 3}};
    for (auto _ : state)
        benchmark::DoNotOptimize(whitney_verify(bundle));
}
BENCHMARK(BM_WhitneyVerify);

static void BM_LatticeSum(benchmark::State& state)
{
    const WeightSpec w({1, 2, 3});
    const long m = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(lattice_sum_monomial(w, {1, 0, 0}, m));
}
BENCHMARK(BM_LatticeSum)->Arg(96)->Arg(768)->Arg(6144);

BENCHMARK_MAIN();
