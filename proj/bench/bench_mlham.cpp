// Benchmarks: OpenMP class enumeration against the serial reference, the
// streaming rate of the Hamilton walk, and plan construction.

#include "mlham/factor.hpp"
#include "mlham/gluing.hpp"
#include "mlham/hamilton.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_EnumerateClassesSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto classes = mlham::enumerate_classes_serial(n);
        benchmark::DoNotOptimize(classes.data());
    }
    state.SetLabel("n=" + std::to_string(n));
}
BENCHMARK(BM_EnumerateClassesSerial)->Arg(9)->Arg(10)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_EnumerateClassesParallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto classes = mlham::enumerate_classes(n);
        benchmark::DoNotOptimize(classes.data());
    }
    state.SetLabel("n=" + std::to_string(n));
}
BENCHMARK(BM_EnumerateClassesParallel)->Arg(9)->Arg(10)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BuildGluingPlan(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto plan = mlham::build_gluing_plan(n);
        benchmark::DoNotOptimize(plan.chosen.data());
    }
}
BENCHMARK(BM_BuildGluingPlan)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_HamiltonStream(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const mlham::GluingPlan plan = mlham::build_gluing_plan(n);
    std::uint64_t vertices = 0;
    for (auto _ : state) {
        mlham::HamiltonStream stream(plan);
        std::uint64_t count = 1;
        while (stream.advance()) ++count;
        benchmark::DoNotOptimize(count);
        vertices += count;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(vertices));
    state.SetLabel("full cycle, n=" + std::to_string(n));
}
BENCHMARK(BM_HamiltonStream)->Arg(8)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
