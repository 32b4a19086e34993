#include <layered/generators.hpp>
#include <layered/verifiers.hpp>

#include <benchmark/benchmark.h>

using namespace layered;

namespace
{
    auto masks_for(int n) -> std::vector<std::uint32_t>
    {
        auto inst = gen_random(n, n, 1, 4, 1.0, 11);
        return successor_masks(build_trading_graph(inst, 0));
    }

    void indicator_serial(benchmark::State & state)
    {
        auto masks = masks_for(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_cycle_indicator_serial(masks));
    }

    void indicator_parallel(benchmark::State & state)
    {
        auto masks = masks_for(static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_cycle_indicator(masks));
    }

    void closure_serial(benchmark::State & state)
    {
        auto table = exact_cycle_indicator(masks_for(static_cast<int>(state.range(0))));
        for (auto _ : state) {
            auto copy = table;
            superset_closure_serial(std::span<std::uint8_t>(copy));
            benchmark::DoNotOptimize(copy.data());
        }
    }

    void closure_parallel(benchmark::State & state)
    {
        auto table = exact_cycle_indicator(masks_for(static_cast<int>(state.range(0))));
        for (auto _ : state) {
            auto copy = table;
            superset_closure(std::span<std::uint8_t>(copy));
            benchmark::DoNotOptimize(copy.data());
        }
    }

    void dp_verify(benchmark::State & state)
    {
        auto inst = gen_random(RandomSpec{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 4, 4, 1.0, 3, 2, 2});
        auto notion = static_cast<Notion>(state.range(1));
        for (auto _ : state)
            benchmark::DoNotOptimize(verify_dp(inst, notion).optimal);
    }
}

BENCHMARK(indicator_serial)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(indicator_parallel)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_serial)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_parallel)->DenseRange(12, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(dp_verify)->ArgsProduct({{14, 16, 18, 20}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
