// Wall-clock comparison of the Lucas algorithms against each other and the
// fast-doubling Fibonacci baseline. The op-count story (squarings only vs
// general multiplications) lives in the library's own bench harness and the
// test suite; this measures what the counts predict.

#include "lucaskit/natural.hpp"
#include "lucaskit/op_counts.hpp"
#include "lucaskit/sequences.hpp"

#include <benchmark/benchmark.h>

using namespace lucaskit;

namespace {

void BM_LucasMiddle(benchmark::State& state) {
    const Index n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        OpCounts counts;
        benchmark::DoNotOptimize(lucas_middle(n, counts));
    }
}

void BM_LucasRippleMemo(benchmark::State& state) {
    const Index n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        OpCounts counts;
        benchmark::DoNotOptimize(lucas_ripple_memo(n, counts));
    }
}

void BM_LucasViaFibDoubling(benchmark::State& state) {
    const Index n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        OpCounts counts;
        benchmark::DoNotOptimize(lucas_from_fib(n, counts));
    }
}

void BM_FibDoubling(benchmark::State& state) {
    const Index n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        OpCounts counts;
        benchmark::DoNotOptimize(fib_fast_doubling(n, counts));
    }
}

void BM_FibViaLucasMiddle(benchmark::State& state) {
    const Index n = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        OpCounts counts;
        benchmark::DoNotOptimize(fib(n, Algo::middle, counts));
    }
}

}  // namespace

BENCHMARK(BM_LucasMiddle)->RangeMultiplier(16)->Range(1 << 8, 1 << 24);
BENCHMARK(BM_LucasRippleMemo)->RangeMultiplier(16)->Range(1 << 8, 1 << 24);
BENCHMARK(BM_LucasViaFibDoubling)->RangeMultiplier(16)->Range(1 << 8, 1 << 24);
BENCHMARK(BM_FibDoubling)->RangeMultiplier(16)->Range(1 << 8, 1 << 24);
BENCHMARK(BM_FibViaLucasMiddle)->RangeMultiplier(16)->Range(1 << 8, 1 << 24);

BENCHMARK_MAIN();
