#include <benchmark/benchmark.h>

#include "mcs/acs.hpp"
#include "mcs/exact.hpp"
#include "mcs/gen.hpp"
#include "mcs/interval.hpp"
#include "mcs/leaf_bar_cover.hpp"

namespace {

mcs::IntervalInstance instance(benchmark::State& state, int alpha) {
    return mcs::random_interval_instance({static_cast<std::size_t>(state.range(0)), alpha, 12345, true});
}

void BM_LeafBarMatrix(benchmark::State& state) {
    auto inst = instance(state, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mcs::leaf_bar_matrix(inst));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LeafBarMatrix)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_OptimalCover(benchmark::State& state) {
    auto inst = instance(state, 3);
    std::size_t states = 0;
    for (auto _ : state) {
        auto r = mcs::optimal_leaf_bar_cover(inst);
        states = r.states;
        benchmark::DoNotOptimize(r);
    }
    state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_OptimalCover)->DenseRange(10, 40, 10)->Unit(benchmark::kMillisecond);

void BM_ExactMcs(benchmark::State& state) {
    auto inst = instance(state, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mcs::exact_mcs(inst.graph()));
}
BENCHMARK(BM_ExactMcs)->DenseRange(6, 18, 4)->Unit(benchmark::kMicrosecond);

void BM_Pipeline(benchmark::State& state) {
    auto inst = instance(state, 3);
    for (auto _ : state) benchmark::DoNotOptimize(mcs::approximate_consistent_subset(inst));
}
BENCHMARK(BM_Pipeline)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
