#include "lastsq/enumeration.hpp"
#include "lastsq/formulas.hpp"

#include <benchmark/benchmark.h>

using namespace lastsq;

namespace {

void BM_CountDPlus(benchmark::State& state) {
    ClassFilter plus;
    plus.sign = SignClass::Plus;
    EnumerationOptions options;
    options.jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count(Family::D, state.range(0), 3, plus, options));
}
BENCHMARK(BM_CountDPlus)->Args({16, 1})->Args({16, 4})->Args({20, 1})->Args({20, 4})->Unit(benchmark::kMillisecond);

void BM_CountBPlus(benchmark::State& state) {
    ClassFilter plus;
    plus.sign = SignClass::Plus;
    EnumerationOptions options;
    options.jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count(Family::B, state.range(0), 3, plus, options));
}
BENCHMARK(BM_CountBPlus)->Args({12, 1})->Args({12, 4})->Args({14, 1})->Args({14, 4})->Unit(benchmark::kMillisecond);

void BM_EvalS(benchmark::State& state) {
    const long long m = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eval_S(m, m / 4));
}
BENCHMARK(BM_EvalS)->Arg(40)->Arg(200)->Arg(1000);

void BM_EvalW(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eval_W(n, n / 3));
}
BENCHMARK(BM_EvalW)->Arg(40)->Arg(200);

void BM_GeneratingFunction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gf_coefficients(state.range(0), 40));
}
BENCHMARK(BM_GeneratingFunction)->Arg(2)->Arg(8);

} // namespace

BENCHMARK_MAIN();
