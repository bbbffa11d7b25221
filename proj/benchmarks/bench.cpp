#include "dsbo/closedform.hpp"
#include "dsbo/fsystem.hpp"
#include "dsbo/gegenbauer.hpp"
#include "dsbo/operator.hpp"
#include "dsbo/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace dsbo;

namespace {

// Admissible point with a = |m| + N + 2.
SystemParams point(int N) {
    const int m = N + 2;
    const long a = m + N + 2;
    const long l = lambda_set(N, a, m).front();
    return SystemParams::make(Rational(l), Rational(l + a), N, m);
}

void BM_Gegenbauer(benchmark::State& st) {
    const Rational mu(-7, 3);
    for (auto _ : st) benchmark::DoNotOptimize(gegenbauer_it(static_cast<int>(st.range(0)), mu));
}
BENCHMARK(BM_Gegenbauer)->Arg(4)->Arg(12)->Arg(24);

void BM_Assemble(benchmark::State& st) {
    auto p = point(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(assemble_system(p));
}
BENCHMARK(BM_Assemble)->DenseRange(0, 3);

void BM_SolveXi(benchmark::State& st) {
    auto p = point(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(solve_xi(p));
}
BENCHMARK(BM_SolveXi)->DenseRange(0, 3);

void BM_ClosedSolution(benchmark::State& st) {
    auto p = point(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(closed_solution(p));
}
BENCHMARK(BM_ClosedSolution)->DenseRange(0, 3);

void BM_EmitPaper(benchmark::State& st) {
    auto p = point(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(emit_operator(p, OperatorForm::Paper));
}
BENCHMARK(BM_EmitPaper)->DenseRange(0, 3);

void BM_EmitCanonical(benchmark::State& st) {
    auto p = point(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(emit_operator(p, OperatorForm::Canonical));
}
BENCHMARK(BM_EmitCanonical)->DenseRange(0, 3);

void BM_Sweep(benchmark::State& st) {
    SweepConfig cfg;
    cfg.n_max = static_cast<int>(st.range(0));
    cfg.jobs = static_cast<unsigned>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(run_sweep(cfg));
}
BENCHMARK(BM_Sweep)->Args({1, 1})->Args({1, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
