#include "divrec/builtin_specs.hpp"
#include "divrec/divisors.hpp"
#include "divrec/recurrence.hpp"
#include "divrec/sequences.hpp"

#include <benchmark/benchmark.h>

using namespace divrec;

static void BM_Recurrence(benchmark::State& state, ProductSpec spec)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(coeffs_via_recurrence(spec, order));
    state.SetComplexityN(state.range(0));
}

static void BM_Expansion(benchmark::State& state, ProductSpec spec)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(coeffs_via_expansion(spec, order));
    state.SetComplexityN(state.range(0));
}

BENCHMARK_CAPTURE(BM_Recurrence, partitions, specs::partitions())->RangeMultiplier(2)->Range(128, 2048)->Complexity();
BENCHMARK_CAPTURE(BM_Expansion, partitions, specs::partitions())->RangeMultiplier(2)->Range(128, 2048)->Complexity();
BENCHMARK_CAPTURE(BM_Recurrence, delta8, specs::delta(8))->RangeMultiplier(2)->Range(128, 1024)->Complexity();
BENCHMARK_CAPTURE(BM_Expansion, delta8, specs::delta(8))->RangeMultiplier(2)->Range(128, 1024)->Complexity();
BENCHMARK_CAPTURE(BM_Recurrence, ramanujan, specs::ramanujan())->RangeMultiplier(2)->Range(128, 1024);
BENCHMARK_CAPTURE(BM_Expansion, ramanujan, specs::ramanujan())->RangeMultiplier(2)->Range(128, 1024);

static void BM_PartitionDP(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(partition_prefix(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PartitionDP)->RangeMultiplier(2)->Range(128, 4096);

static void BM_SigmaTable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma_table(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SigmaTable)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);

static void BM_MultiplyDense(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto a = coeffs_via_recurrence(specs::partitions(), order);
    const auto c = coeffs_via_recurrence(specs::p_regular(3), order);
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(a, c));
}
BENCHMARK(BM_MultiplyDense)->RangeMultiplier(2)->Range(64, 512);

static void BM_MultiplySparse(benchmark::State& state)
{
    const auto order = static_cast<std::size_t>(state.range(0));
    const auto a = coeffs_via_recurrence(specs::partitions(), order);
    const auto b = coeffs_via_recurrence(specs::jacobi(), order);
    for (auto _ : state)
        benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_MultiplySparse)->RangeMultiplier(2)->Range(64, 2048);

BENCHMARK_MAIN();
