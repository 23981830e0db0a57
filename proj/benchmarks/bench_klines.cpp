#include "klines/additivity.hpp"
#include "klines/diophantine.hpp"
#include "klines/elliptic.hpp"
#include "klines/lie.hpp"
#include "klines/variation.hpp"

#include <benchmark/benchmark.h>

using namespace klines;

static void BM_KostantBracket(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int e = 1; e < d; ++e) benchmark::DoNotOptimize(kostant_vector_bracket(d, e));
}
BENCHMARK(BM_KostantBracket)->Arg(8)->Arg(12)->Arg(16);

static void BM_KostantClosed(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int e = 1; e < d; ++e) benchmark::DoNotOptimize(kostant_vector_closed(d, e));
}
BENCHMARK(BM_KostantClosed)->Arg(8)->Arg(12)->Arg(16);

static void BM_SingularScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(singular_scan(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SingularScan)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_QuarticScan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(quartic_solutions(state.range(0)));
}
BENCHMARK(BM_QuarticScan)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_EllipticLog(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(elliptic_log(9.0, 4.0));
}
BENCHMARK(BM_EllipticLog);

static void BM_MargulisAPartProduct(benchmark::State& state) {
    const auto f = random_split_element(3, 1), q = random_split_element(3, 2);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(margulis_a_part_product(f, n, q, n));
}
BENCHMARK(BM_MargulisAPartProduct)->Arg(2)->Arg(10)->Unit(benchmark::kMicrosecond);

static void BM_VariationCone(benchmark::State& state) {
    const auto gens = random_generators(3, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(sample_variation_cone(gens, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VariationCone)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
