#include <benchmark/benchmark.h>

#include "pwc/catalog.hpp"
#include "pwc/verify.hpp"

namespace {

using namespace pwc;

std::vector<double> grid(size_t n) {
    std::vector<double> g(n);
    for (size_t i = 0; i < n; ++i) g[i] = 0.2 + 2.3 * static_cast<double>(i) / (n - 1);
    return g;
}

void bench_half_map(benchmark::State& state, ExecutionMode mode) {
    const auto entry = catalog_find("2.18");
    const auto g = grid(static_cast<size_t>(state.range(0)));
    for (auto _ : state) {
        HalfMap map = half_map(entry->system, 0, g, {}, mode);
        benchmark::DoNotOptimize(map.samples.data());
    }
}

void serial_half_map(benchmark::State& state) { bench_half_map(state, ExecutionMode::Serial); }
void parallel_half_map(benchmark::State& state) { bench_half_map(state, ExecutionMode::Parallel); }

void bench_scan(benchmark::State& state, ExecutionMode mode) {
    const auto entry = catalog_find("3.60");
    const auto g = grid(16);
    HalfMap left = half_map(entry->system, 0, g, {}, mode);
    HalfMap right = half_map(entry->system, 1, g, {}, mode);
    for (auto _ : state) {
        FixedPointScan scan =
            scan_fixed_points(left, right, 0.2, 1.6, 1.4 / state.range(0), mode);
        benchmark::DoNotOptimize(scan.grid.data());
    }
}

void serial_scan(benchmark::State& state) { bench_scan(state, ExecutionMode::Serial); }
void parallel_scan(benchmark::State& state) { bench_scan(state, ExecutionMode::Parallel); }

}  // namespace

BENCHMARK(serial_half_map)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_half_map)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(serial_scan)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(parallel_scan)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
