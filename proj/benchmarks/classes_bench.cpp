#include <benchmark/benchmark.h>

#include "spencer/char_classes.hpp"
#include "spencer/samples.hpp"
#include "spencer/spencer_rr.hpp"

using namespace spencer;

namespace {

void BM_ChernCharacter(benchmark::State& state) {
  samples::Rng rng(1);
  const RingDescriptor ring{static_cast<int>(state.range(0))};
  const BundleClass e = samples::random_bundle(rng, ring, 4);
  for (auto _ : state) benchmark::DoNotOptimize(chern_character(e));
}
BENCHMARK(BM_ChernCharacter)->DenseRange(1, 4);

void BM_SymPower(benchmark::State& state) {
  const BundleClass e = psu2_adjoint_bundle(4);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chern_character(sym_power(e, k)));
}
BENCHMARK(BM_SymPower)->DenseRange(1, 4);

void BM_Tensor(benchmark::State& state) {
  samples::Rng rng(2);
  const RingDescriptor ring{4};
  const BundleClass e = samples::random_bundle(rng, ring, 4), f = samples::random_bundle(rng, ring, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tensor(e, f));
}
BENCHMARK(BM_Tensor);

void BM_TotalEuler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpencerComplexSpec spec(n, psu2_adjoint_bundle(n));
  for (auto _ : state) benchmark::DoNotOptimize(total_euler(spec));
}
BENCHMARK(BM_TotalEuler)->DenseRange(2, 4);

}  // namespace
