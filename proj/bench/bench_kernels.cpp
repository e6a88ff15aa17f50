// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "shicores/bijection.hpp"
#include "shicores/cores.hpp"

namespace {

void BM_EnumerateSerial(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shicores::enumerate_serial(n, m));
    }
}

void BM_EnumerateParallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int m = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shicores::enumerate(n, m));
    }
}

void BM_CoresSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(shicores::cores_up_to_serial(4, static_cast<int>(state.range(0))));
    }
}

void BM_CoresParallel(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(shicores::cores_up_to(4, static_cast<int>(state.range(0))));
    }
}

} // namespace

BENCHMARK(BM_EnumerateSerial)->Args({4, 3})->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({4, 3})->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoresSerial)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoresParallel)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
