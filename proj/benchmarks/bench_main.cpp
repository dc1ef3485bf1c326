#include "uvreg/kernels.hpp"
#include "uvreg/second.hpp"
#include "uvreg/specfun.hpp"
#include "uvreg/sweep.hpp"
#include "uvreg/zeroth.hpp"

#include <benchmark/benchmark.h>

using namespace uvreg;

static void BM_Dawson(benchmark::State& state)
{
    double x = static_cast<double>(state.range(0)) / 10.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(specfun::dawson(x));
}
BENCHMARK(BM_Dawson)->Arg(5)->Arg(50)->Arg(300);

static void BM_KernelI(benchmark::State& state)
{
    double l = zeroth::lambda_limit();
    double k = static_cast<double>(state.range(0)) * l / 10.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::kernel_I(k, l));
}
BENCHMARK(BM_KernelI)->Arg(1)->Arg(10)->Arg(60)->Arg(300);

static void BM_CutoffK0(benchmark::State& state)
{
    double l = zeroth::lambda_limit();
    for (auto _ : state)
        benchmark::DoNotOptimize(second::cutoff_k0(1e-3, l));
}
BENCHMARK(BM_CutoffK0)->Unit(benchmark::kMillisecond);

static void BM_E2Exact(benchmark::State& state)
{
    double l = zeroth::lambda_limit();
    second::Settings s;
    s.include_j = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(second::e2_exact(1e-2, l, s));
}
BENCHMARK(BM_E2Exact)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& state)
{
    auto gs = sweep::grid(1e-4, 1e-1, 16, sweep::Scale::log);
    auto jobs = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep::run(gs, std::nullopt, {}, jobs));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_JOracle(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::kernel_J_oracle(0.0, 1.0, 100000));
}
BENCHMARK(BM_JOracle)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
