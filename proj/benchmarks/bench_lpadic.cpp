#include "lpadic/certify.hpp"
#include "lpadic/irrat.hpp"
#include "lpadic/lvalues.hpp"
#include "lpadic/pade.hpp"

#include <benchmark/benchmark.h>

using namespace lpadic;

static void BM_BernoulliFill(benchmark::State& state) {
    for (auto _ : state) {
        BernoulliCache cache;
        benchmark::DoNotOptimize(cache.get(static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_BernoulliFill)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_Teichmuller(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(teichmuller(2, 5, state.range(0)));
}
BENCHMARK(BM_Teichmuller)->Arg(128)->Arg(1024);

static void BM_EvalSeries(benchmark::State& state) {
    const auto pt = EvalPoint::make(1, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(eval_series(SeriesKind::T, pt, state.range(0)));
}
BENCHMARK(BM_EvalSeries)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_EvalSeriesFc(benchmark::State& state) {
    const auto pt = EvalPoint::make(1, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(eval_series_fc(SeriesKind::T, pt, state.range(0)));
}
BENCHMARK(BM_EvalSeriesFc)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_IdentitySuite(benchmark::State& state) {
    for (auto _ : state)
        for (const auto& id : identity_ids()) benchmark::DoNotOptimize(verify_identity(id, state.range(0)));
}
BENCHMARK(BM_IdentitySuite)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_Convergents(benchmark::State& state) {
    const BigRational x(BigInt(1), BigInt(4));
    for (auto _ : state) benchmark::DoNotOptimize(convergent_seq(Family::III, x, state.range(0)));
}
BENCHMARK(BM_Convergents)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_SymbolicConvergents(benchmark::State& state) {
    const PolyQ x = PolyQ::variable();
    for (auto _ : state) benchmark::DoNotOptimize(convergent_seq(Family::I, x, state.range(0)));
}
BENCHMARK(BM_SymbolicConvergents)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_RemainderValuation(benchmark::State& state) {
    const auto pt = EvalPoint::make(1, 4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(remainder_valuation(Family::III, pt, 1024, state.range(0)));
}
BENCHMARK(BM_RemainderValuation)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_FunctionalEquations(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_functional_equations(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FunctionalEquations)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_Certificates(benchmark::State& state) {
    const auto catalog = certificate_catalog();
    for (auto _ : state)
        for (const auto& c : catalog) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_Certificates)->Unit(benchmark::kMillisecond);

static void BM_Condition(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(condition(Condition::B, 2, 16, state.range(0)));
}
BENCHMARK(BM_Condition)->Arg(60)->Arg(240);

BENCHMARK_MAIN();
