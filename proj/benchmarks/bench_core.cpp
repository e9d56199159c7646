#include <benchmark/benchmark.h>

#include "qpriv/harness.hpp"

using namespace qpriv;

namespace {

void BM_Entropy(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const DensityMatrix rho = random_density(DimSignature({dim}), dim, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy(rho));
  }
}
BENCHMARK(BM_Entropy)->Arg(8)->Arg(32)->Arg(64);

void BM_PartialTrace(benchmark::State& state) {
  const DimSignature sig({2, 2, 2, 2, 2});
  const DensityMatrix rho = random_density(sig, sig.total(), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(rho.matrix(), sig, {0, 2}));
  }
}
BENCHMARK(BM_PartialTrace);

void BM_KronEmbed(benchmark::State& state) {
  SplitMix64 rng(3);
  const ComplexMatrix u = haar_unitary(4, rng);
  const DimSignature sig({2, 2, 2, 2});
  const DensityMatrix rho = random_density(sig, sig.total(), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_unitary(rho.matrix(), u, sig, {1, 2}));
  }
}
BENCHMARK(BM_KronEmbed);

void BM_EvolveTripartite(benchmark::State& state) {
  const PureState initial = random_pure(DimSignature({2, 2, 2}), 17);
  const Scenario s(initial, {{"B", random_channel(2, 2, 18), std::nullopt},
                             {"C", random_channel(2, 2, 19), std::nullopt}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(s));
  }
}
BENCHMARK(BM_EvolveTripartite);

void BM_LegPrivacy(benchmark::State& state) {
  const PureState initial = random_pure(DimSignature({2, 2, 2}), 23);
  const Scenario s(initial, {{"B", random_channel(2, 2, 24), std::nullopt},
                             {"C", random_channel(2, 2, 25), std::nullopt}});
  const EvolvedScenario e = evolve(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leg_privacy(e, 0));
  }
}
BENCHMARK(BM_LegPrivacy);

void BM_DiscordBell(benchmark::State& state) {
  const DensityMatrix bell = named_state("bell", DimSignature({2, 2})).density();
  for (auto _ : state) {
    benchmark::DoNotOptimize(discord(bell));
  }
}
BENCHMARK(BM_DiscordBell);

void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix rho = random_density(DimSignature({2, 2}), 4, 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

}  // namespace

BENCHMARK_MAIN();
