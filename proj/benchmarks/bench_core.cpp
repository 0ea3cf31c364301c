#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>
#include <vector>

#include "nsc/algebra.hpp"
#include "nsc/distributions.hpp"
#include "nsc/entropy.hpp"
#include "nsc/escort.hpp"
#include "nsc/quadrature.hpp"
#include "nsc/uncertainty.hpp"

namespace {

void BM_CoupledExp(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsc::coupled_exp(x, 0.5));
    x += 1e-6;
  }
}
BENCHMARK(BM_CoupledExp);

void BM_DensityGaussianFamily(benchmark::State& state) {
  const nsc::CoupledDensityParams p(0.0, 1.0, 0.5, 2);
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsc::density(p, x));
    x = x < 5.0 ? x + 1e-5 : -5.0;
  }
}
BENCHMARK(BM_DensityGaussianFamily);

void BM_EscortIntegral(benchmark::State& state) {
  const nsc::CoupledDensityParams p(0.0, 1.0, state.range(0) / 10.0, 2);
  const nsc::Coupling metric(state.range(0) / 10.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsc::coupled_average_uncertainty_continuous(p, metric));
  }
}
BENCHMARK(BM_EscortIntegral)->Arg(1)->Arg(10)->Arg(20);

void BM_ShannonBanded(benchmark::State& state) {
  const double kappa = state.range(0) / 10.0;
  const nsc::CoupledDensityParams p(0.0, 1.0, kappa, 2);
  const nsc::EntropySpec spec{nsc::EntropyKind::shannon, nsc::Coupling(kappa, 2.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsc::entropy_continuous(p, spec));
  }
}
BENCHMARK(BM_ShannonBanded)->Arg(1)->Arg(10)->Arg(20);

void BM_DiscreteEntropy(benchmark::State& state) {
  std::vector<double> probs(state.range(0));
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    probs[i] = 1.0 + static_cast<double>(i % 17);
    sum += probs[i];
  }
  for (double& v : probs) v /= sum;
  const nsc::DiscreteDistribution p(probs);
  const nsc::EntropySpec spec{nsc::EntropyKind::coupled, nsc::Coupling(1.0, 2.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsc::entropy_discrete(p, spec));
  }
}
BENCHMARK(BM_DiscreteEntropy)->Arg(16)->Arg(1024);

void BM_SampleHeavyTail(benchmark::State& state) {
  const nsc::CoupledDensityParams p(0.0, 1.0, 0.5, 2);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsc::sample(p, 1024, seed++));
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_SampleHeavyTail);

}  // namespace

BENCHMARK_MAIN();
