#include <benchmark/benchmark.h>

#include "symrep/hecke.hpp"
#include "symrep/lie_closure.hpp"
#include "symrep/partition.hpp"
#include "symrep/seminormal.hpp"
#include "symrep/series.hpp"

using namespace symrep;

static void BM_Dimension(benchmark::State& state) {
    Partition p = Partition::parse("[9,3,3,3,3,1,1,1]");
    for (auto _ : state) benchmark::DoNotOptimize(dimension(p));
}
BENCHMARK(BM_Dimension);

static void BM_BuildRep(benchmark::State& state) {
    Partition p = Partition::parse("[3,2,1]");
    for (auto _ : state) benchmark::DoNotOptimize(build_rep(p).dim());
}
BENCHMARK(BM_BuildRep);

static void BM_ClosureSmallQ(benchmark::State& state) {
    Partition p = Partition::parse("[3,2]");
    for (auto _ : state) benchmark::DoNotOptimize(g_lambda_dim(p, FieldMode::Q()));
}
BENCHMARK(BM_ClosureSmallQ);

static void BM_ClosureSmallFp(benchmark::State& state) {
    Partition p = Partition::parse("[3,2,1]");
    for (auto _ : state)
        benchmark::DoNotOptimize(g_lambda_dim(p, FieldMode::Fp(kMersenne31)));
}
BENCHMARK(BM_ClosureSmallFp);

static void BM_SeriesMatrixMul(benchmark::State& state) {
    MatrixQ s = rep_gen(Partition::parse("[3,2,1]"), 1);
    SeriesMatrix x = SeriesMatrix::from_constant(s, 8) * exp_matrix(s, 8);
    for (auto _ : state) benchmark::DoNotOptimize(x * x);
}
BENCHMARK(BM_SeriesMatrixMul);

static void BM_BraidQuadratic(benchmark::State& state) {
    Partition p = Partition::parse("[3,2]");
    for (auto _ : state) benchmark::DoNotOptimize(quadratic_check(p, 1, 8));
}
BENCHMARK(BM_BraidQuadratic);

BENCHMARK_MAIN();
