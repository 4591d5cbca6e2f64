#include "flatstir/bijection.hpp"
#include "flatstir/enumeration.hpp"
#include "flatstir/stirling.hpp"
#include "flatstir/typeb.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace flatstir;

void BM_StirlingWalk(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    std::uint64_t words = 0;
    for (auto _ : state) {
        words = 0;
        for_each_stirling(n, 2, [&](std::span<const Letter>) { ++words; });
        benchmark::DoNotOptimize(words);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words));
}
BENCHMARK(BM_StirlingWalk)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_FilterRuns(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tally_flattened_runs(n, 2, 1));
}
BENCHMARK(BM_FilterRuns)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_TypeBWalk(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    std::uint64_t count = 0;
    for (auto _ : state) {
        count = 0;
        for_each_typeb(n, [&](const TypeBPartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}
BENCHMARK(BM_TypeBWalk)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_PhiPsiRoundTrip(benchmark::State& state) {
    const auto partitions = generate_typeb(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        for (const auto& p : partitions) {
            const auto w = phi(p, CheckOutput::no);
            benchmark::DoNotOptimize(psi(w));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * partitions.size()));
}
BENCHMARK(BM_PhiPsiRoundTrip)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BijectionRuns(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tally_flattened_runs_via_bijection(n, 1));
}
BENCHMARK(BM_BijectionRuns)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);

void BM_Dowling(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dowling(n));
}
BENCHMARK(BM_Dowling)->RangeMultiplier(4)->Range(4, 256);

void BM_FlatmRecurrence(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(flatm_recurrence(n, 3));
}
BENCHMARK(BM_FlatmRecurrence)->RangeMultiplier(4)->Range(4, 256);

void BM_FlatmSeries(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(flatm_series(n, 3));
}
BENCHMARK(BM_FlatmSeries)->DenseRange(4, 16, 4);

}  // namespace

BENCHMARK_MAIN();
