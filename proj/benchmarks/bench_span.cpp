#include <benchmark/benchmark.h>

#include "exflat/ideal.hpp"

using namespace exflat;

static void BM_MinorGenerators495(benchmark::State& state) {
    for (auto _ : state) {
        auto gens = minor_generators(3, 4, 4, true, 0, 4);
        benchmark::DoNotOptimize(gens);
    }
}
BENCHMARK(BM_MinorGenerators495);

static void BM_PfaffianGenerators495(benchmark::State& state) {
    for (auto _ : state) {
        auto gens = pfaffian_generators(4, 8);
        benchmark::DoNotOptimize(gens);
    }
}
BENCHMARK(BM_PfaffianGenerators495);

static void BM_SpanDim630(benchmark::State& state) {
    auto gens = minor_generators(3, 4, 4, true, 0, 4);
    auto pf = pfaffian_generators(4, 8);
    gens.insert(gens.end(), pf.begin(), pf.end());
    for (auto _ : state) {
        int d = span_dimension(gens, kDefaultPrime);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SpanDim630);

static void BM_SpanDimPsi1Cubics(benchmark::State& state) {
    // 7056 cubic minors of the 9x9 symbolic psi_1, rank 2634.
    auto gens = minor_generators(3, 3, 3, false, 1, 3);
    for (auto _ : state) {
        int d = span_dimension(gens, kDefaultPrime);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_SpanDimPsi1Cubics);

BENCHMARK_MAIN();
