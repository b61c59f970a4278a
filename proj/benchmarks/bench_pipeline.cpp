#include <benchmark/benchmark.h>

#include "domset/exact.hpp"
#include "domset/generate.hpp"
#include "domset/greedy.hpp"
#include "domset/purify.hpp"

namespace {

using namespace domset;

Graph sparse(std::size_t n) {
    return gen_random_graph({n, Gnm{n + n / 20}, 42, true});
}

void BM_Stage1(benchmark::State& state) {
    const auto g = sparse(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(greedy_dominating_set(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Stage1)->RangeMultiplier(2)->Range(1000, 16000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Procedure(benchmark::State& state) {
    const auto g = sparse(static_cast<std::size_t>(state.range(1)));
    const auto stage1 = greedy_dominating_set(g);
    const auto proc = static_cast<Procedure>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_procedure(proc, g, stage1, {}));
    state.SetLabel(std::string(to_string(proc)));
}
BENCHMARK(BM_Procedure)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {2000, 15000}})
    ->Unit(benchmark::kMillisecond);

void BM_ExactGamma(benchmark::State& state) {
    const auto g = gen_random_graph({static_cast<std::size_t>(state.range(0)), Gnp{0.15}, 7, true});
    for (auto _ : state) benchmark::DoNotOptimize(exact_gamma(g));
}
BENCHMARK(BM_ExactGamma)->DenseRange(20, 40, 10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
