#include <benchmark/benchmark.h>

#include "ihg/gkz_basis.hpp"
#include "ihg/lauricella.hpp"
#include "ihg/system.hpp"
#include "ihg/weyl_generators.hpp"

using namespace ihg;

namespace {

SystemParams params(int n)
{
    SystemParams p;
    p.n = n;
    for (int k = 0; k < n; ++k) {
        p.alpha.emplace_back(0.4 + 0.3 * k, 0.0);
    }
    p.gamma = 0.7;
    p.a = 0.1;
    p.b = 0.9;
    return p;
}

Point point(int n)
{
    Point x(n);
    for (int k = 0; k < n; ++k) {
        x(0, k) = 1.0 + 0.1 * k;
        x(1, k) = 0.05 + 0.1 * k;
    }
    return x;
}

} // namespace

static void BM_EvalFD(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const int K = static_cast<int>(state.range(1));
    FDParams p{1.7, std::vector<Complex>(static_cast<std::size_t>(n), Complex(-0.6)), 2.7};
    std::vector<Complex> z(static_cast<std::size_t>(n), Complex(-0.2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evalFD(p, z, K).value);
    }
}
BENCHMARK(BM_EvalFD)->Args({1, 40})->Args({2, 40})->Args({3, 40})->Args({4, 20});

static void BM_EvalF(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const SystemParams p = params(n);
    const Point x = point(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evalF(p, x, 40).value);
    }
}
BENCHMARK(BM_EvalF)->DenseRange(1, 3);

static void BM_EvalPhi(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const SystemParams p = params(n);
    const Point x = point(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evalPhi(p, x, 1e-10).value);
    }
}
BENCHMARK(BM_EvalPhi)->DenseRange(1, 4);

static void BM_WeylMultiply(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const WeylOperator up = shiftUp1k(n, 0);
    const WeylOperator down = shiftDown1k(n, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(up * down);
    }
}
BENCHMARK(BM_WeylMultiply)->DenseRange(2, 4);

static void BM_WeylVerify(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(weylVerify(n));
    }
}
BENCHMARK(BM_WeylVerify)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_PsiSeries(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    const int K = static_cast<int>(state.range(1));
    const SystemParams p = params(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(psiSeries(p, n - 1, K));
    }
}
BENCHMARK(BM_PsiSeries)->Args({2, 40})->Args({3, 20})->Args({4, 12});
BENCHMARK_MAIN();
