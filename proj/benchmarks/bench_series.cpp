#include "vvmf/classical_forms.hpp"
#include "vvmf/hypergeom.hpp"
#include "vvmf/mlde.hpp"

#include <benchmark/benchmark.h>

using namespace vvmf;

static void BM_MulRational(benchmark::State& state) {
    const long n = state.range(0);
    const QExpansion f = frobenius_solve(derive_params(Rational(3, 10), Rational(2, 10)), Component::f1, n);
    const QExpansion g = j_inverse(n);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
    state.SetComplexityN(n);
}
BENCHMARK(BM_MulRational)->RangeMultiplier(2)->Range(64, 512)->Complexity();

static void BM_MulInteger(benchmark::State& state) {
    const long n = state.range(0);
    const QExpansion e4 = eisenstein(4, n), e6 = eisenstein(6, n);
    for (auto _ : state) benchmark::DoNotOptimize(e4 * e6);
    state.SetComplexityN(n);
}
BENCHMARK(BM_MulInteger)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_Frobenius(benchmark::State& state) {
    const MLDEParams p = derive_params(Rational(3, 10), Rational(2, 10));
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_solve(p, Component::f2, state.range(0)));
}
BENCHMARK(BM_Frobenius)->Arg(100)->Arg(500)->Arg(1002)->Unit(benchmark::kMillisecond);

static void BM_FrobeniusDirect(benchmark::State& state) {
    const MLDEParams p = derive_params(Rational(3, 10), Rational(2, 10));
    for (auto _ : state) benchmark::DoNotOptimize(frobenius_solve_direct(p, Component::f2, state.range(0)));
}
BENCHMARK(BM_FrobeniusDirect)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ClosedForm(benchmark::State& state) {
    const MLDEParams p = derive_params(Rational(3, 10), Rational(2, 10));
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_solution(p, Component::f1, state.range(0)));
}
BENCHMARK(BM_ClosedForm)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_JInverse(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(j_inverse(state.range(0)));
}
BENCHMARK(BM_JInverse)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
