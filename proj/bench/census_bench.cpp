// Serial reference against the OpenMP census kernels.
// Argument: thread count (1 runs the serial path).

#include <benchmark/benchmark.h>

#include "pslab/config.hpp"
#include "pslab/extension_lab.hpp"

using namespace pslab;

namespace {

const ExtContext& context_a2()
{
    static const ExtContext ctx = [] {
        RunConfig cfg;
        cfg.group = "A2";
        cfg.p = 2;
        cfg.N = 2;
        const Workbench wb = Workbench::build(cfg);
        return ExtContext(wb.chars, {wb.chars->trivial(), {}, wb.chars->make({1, 1}), {}, 1});
    }();
    return ctx;
}

const ExtContext& context_a1()
{
    static const ExtContext ctx = [] {
        RunConfig cfg;
        cfg.p = 2;
        cfg.N = 3;
        const Workbench wb = Workbench::build(cfg);
        return ExtContext(wb.chars, {wb.chars->trivial(), {}, wb.chars->make({1}), {}, 2});
    }();
    return ctx;
}

void BM_omega(benchmark::State& state)
{
    const ExtContext& ctx = context_a2();
    for (auto _ : state) benchmark::DoNotOptimize(omega_census(ctx, static_cast<int>(state.range(0))).omega_size);
}

void BM_gamma(benchmark::State& state)
{
    const ExtContext& ctx = context_a1();
    const OmegaCensus om = omega_census(ctx, 1);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_set(ctx, om, static_cast<int>(state.range(0))).gamma_size);
}

void BM_club(benchmark::State& state)
{
    const ExtContext& ctx = context_a2();
    for (auto _ : state) benchmark::DoNotOptimize(club_census(ctx, static_cast<int>(state.range(0))).club_true);
}

void BM_h_partition(benchmark::State& state)
{
    const ExtContext& ctx = context_a2();
    for (auto _ : state) benchmark::DoNotOptimize(h_partition(ctx, static_cast<int>(state.range(0))).classes);
}

} // namespace

BENCHMARK(BM_omega)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_gamma)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_club)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_h_partition)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
