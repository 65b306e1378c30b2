#include <benchmark/benchmark.h>

#include "qsocle/dense.hpp"
#include "qsocle/families.hpp"
#include "qsocle/quasisocle.hpp"
#include "qsocle/statements.hpp"

using namespace qsocle;

static void BM_SemigroupConstruction(benchmark::State& state) {
    const Exponent a = state.range(0);
    for (auto _ : state) {
        NumericalSemigroup h{a, a + 1, 2 * a + 3};
        benchmark::DoNotOptimize(h.conductor());
    }
}
BENCHMARK(BM_SemigroupConstruction)->Arg(10)->Arg(40)->Arg(160);

static void BM_MaxIdealPower(benchmark::State& state) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    for (auto _ : state) benchmark::DoNotOptimize(max_ideal_power(h, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MaxIdealPower)->DenseRange(1, 5);

static void BM_QuasiSocle(benchmark::State& state) {
    const NumericalSemigroup h{7, 10, 18, 22};
    for (auto _ : state) benchmark::DoNotOptimize(quasi_socle(h, state.range(0), 3));
}
BENCHMARK(BM_QuasiSocle)->Arg(7)->Arg(21)->Arg(102);

static void BM_Analyze(benchmark::State& state) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    for (auto _ : state) benchmark::DoNotOptimize(analyze(h, state.range(0), 3));
}
BENCHMARK(BM_Analyze)->Arg(10)->Arg(16)->Arg(100);

static void BM_DenseColonOracle(benchmark::State& state) {
    const NumericalSemigroup h{10, 13, 16, 17, 19};
    const SemigroupIdeal q = SemigroupIdeal::principal(h, 16);
    const SemigroupIdeal m3 = max_ideal_power(h, 3);
    const Exponent bound = oracle_bound(q, m3);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_compare(q, m3, OracleOp::Colon, bound));
}
BENCHMARK(BM_DenseColonOracle);

static void BM_ReductionFormulaSweep(benchmark::State& state) {
    SweepBounds bounds;
    bounds.a_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(StatementId::ReductionFormula, bounds).summary.holds);
}
BENCHMARK(BM_ReductionFormulaSweep)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
