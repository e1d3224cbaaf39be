#include <benchmark/benchmark.h>

#include "phic/complexity.hpp"
#include "phic/sweep.hpp"

namespace {

using namespace phic;

void BM_SweepReference(benchmark::State& state)
{
    const auto networks = boolnet::enumerate_networks(static_cast<int>(state.range(0)));
    const SweepConfig config{MeasureKind::ETC, 1, 1, kDefaultLength};
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_reference(networks, config));
}

void BM_SweepSerial(benchmark::State& state)
{
    const auto networks = boolnet::enumerate_networks(static_cast<int>(state.range(0)));
    const SweepConfig config{MeasureKind::ETC, 1, 1, kDefaultLength};
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(networks, config, Execution::Serial));
}

void BM_SweepParallel(benchmark::State& state)
{
    const auto networks = boolnet::enumerate_networks(static_cast<int>(state.range(0)));
    const SweepConfig config{MeasureKind::ETC, 1, 1, kDefaultLength};
    state.counters["threads"] = parallel_threads();
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(networks, config, Execution::Parallel));
}

void BM_EtcRandom(benchmark::State& state)
{
    const auto seq = gen_mep(static_cast<std::size_t>(state.range(0)), 0, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(complexity::etc(seq.view()));
}

void BM_LzRandom(benchmark::State& state)
{
    const auto seq = gen_mep(static_cast<std::size_t>(state.range(0)), 0, 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(complexity::lz_parse_count(seq.view()));
}

}  // namespace

BENCHMARK(BM_SweepReference)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EtcRandom)->Arg(200)->Arg(2000);
BENCHMARK(BM_LzRandom)->Arg(200)->Arg(2000);

BENCHMARK_MAIN();
