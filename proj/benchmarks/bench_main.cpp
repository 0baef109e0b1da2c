#include <benchmark/benchmark.h>

#include "mdisc/constructions.hpp"
#include "mdisc/entangled.hpp"
#include "mdisc/linalg.hpp"
#include "mdisc/random.hpp"
#include "mdisc/single_system.hpp"

using namespace mdisc;

namespace {

void BM_HermitianEigen(benchmark::State& state) {
  Rng rng(1);
  const ComplexMatrix m = random_hermitian(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m));
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(8)->Arg(16);

void BM_ScoreTable1(benchmark::State& state) {
  const auto ens = table1_projective_ensemble();
  Rng rng(2);
  const CVec psi = random_state(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(score(psi, ens));
}
BENCHMARK(BM_ScoreTable1);

void BM_ScoreWeylD4(benchmark::State& state) {
  const auto ens = ensemble_from_tag("ic:4");
  Rng rng(3);
  const CVec psi = random_state(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(score(psi, ens));
}
BENCHMARK(BM_ScoreWeylD4);

void BM_OptimizeTrine(benchmark::State& state) {
  const auto ens = trine_pair_ensemble();
  OptimizerConfig cfg;
  cfg.restarts = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_d(ens, cfg));
}
BENCHMARK(BM_OptimizeTrine)->Arg(1)->Arg(10);

void BM_HelstromPair(benchmark::State& state) {
  Rng rng(4);
  const ComplexMatrix s0 = random_psd(4, rng);
  const ComplexMatrix s1 = random_psd(4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(helstrom_pair(s0, s1));
}
BENCHMARK(BM_HelstromPair);

void BM_BValueIterative(benchmark::State& state) {
  const auto ens = ensemble_from_tag("ic:3");
  Rng rng(5);
  const BipartiteDensity rho(3, 3, random_density(9, rng));
  for (auto _ : state) benchmark::DoNotOptimize(b_value_optimal(rho, ens));
}
BENCHMARK(BM_BValueIterative);

void BM_AdvantageSearch(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(count_projective_advantage_random(3, state.range(0), 1));
}
BENCHMARK(BM_AdvantageSearch)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
