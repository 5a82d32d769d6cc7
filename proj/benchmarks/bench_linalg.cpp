#include <benchmark/benchmark.h>

#include "exflat/flatten.hpp"
#include "exflat/linalg.hpp"
#include "exflat/prng.hpp"
#include "exflat/secant.hpp"
#include "exflat/tensor.hpp"

using namespace exflat;

static void BM_KappaSymmetric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Tensor3 x = random_dense(3, n, 7, true);
    for (auto _ : state) {
        KappaVector kv = kappa(x);
        benchmark::DoNotOptimize(kv);
    }
}
BENCHMARK(BM_KappaSymmetric)->Arg(4)->Arg(6)->Arg(8);

static void BM_PfaffianInteger(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(5);
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int v = rng.digit();
            m.at(i, j) = v;
            m.at(j, i) = -v;
        }
    for (auto _ : state) {
        Rational pf = pfaffian(m);
        benchmark::DoNotOptimize(pf);
    }
}
BENCHMARK(BM_PfaffianInteger)->Arg(8)->Arg(12)->Arg(16);

static void BM_BareissRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(6);
    QMatrix a(n, n / 2), b(n / 2, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n / 2; ++j) a.at(i, j) = rng.digit();
    for (int i = 0; i < n / 2; ++i)
        for (int j = 0; j < 2 * n; ++j) b.at(i, j) = rng.digit();
    const QMatrix m = a * b;
    for (auto _ : state) {
        int r = rank(m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BareissRank)->Arg(8)->Arg(12)->Arg(16);

static void BM_Terracini(benchmark::State& state) {
    for (auto _ : state) {
        int d = terracini_dimension(3, 6, 7, 1, 3, kDefaultPrime);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_Terracini);

BENCHMARK_MAIN();
