#include <benchmark/benchmark.h>

#include <random>

#include "phicert/entropy.hpp"
#include "phicert/frankl.hpp"
#include "phicert/interval.hpp"
#include "phicert/measure.hpp"
#include "phicert/pipelines.hpp"
#include "phicert/prover.hpp"

namespace {

void BM_IntervalLn(benchmark::State& state) {
  phicert::Interval x(0.36, 0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phicert::ln(x));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_IntervalLn);

void BM_GoldenGap(benchmark::State& state) {
  const phicert::Interval x(0.7, 0.7001);
  for (auto _ : state) benchmark::DoNotOptimize(phicert::golden_gap(x));
}
BENCHMARK(BM_GoldenGap);

void BM_ConvexityPiece(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phicert::verify_convexity_piece());
}
BENCHMARK(BM_ConvexityPiece)->Unit(benchmark::kMillisecond);

void BM_ChainPiece(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(phicert::verify_chain_piece());
}
BENCHMARK(BM_ChainPiece)->Unit(benchmark::kMillisecond);

void BM_ProveG(benchmark::State& state) {
  const auto f = phicert::make_function("G");
  for (auto _ : state) benchmark::DoNotOptimize(phicert::prove_nonneg(f, phicert::Interval(0.619, 0.98), 30));
}
BENCHMARK(BM_ProveG)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveFrankl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phicert::exhaustive_check(n, 1));
}
BENCHMARK(BM_ExhaustiveFrankl)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EvalF(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto mu = phicert::random_measure(0.6, rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phicert::eval_F(mu));
}
BENCHMARK(BM_EvalF)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
