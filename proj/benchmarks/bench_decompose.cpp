#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "eemd/ensemble.hpp"
#include "eemd/envelope.hpp"
#include "eemd/sifter.hpp"

namespace {

std::vector<double> white_noise(std::size_t n) {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> normal;
  std::vector<double> x(n);
  for (double& v : x) v = normal(rng);
  return x;
}

void BM_LocalMean(benchmark::State& state) {
  const auto x = white_noise(static_cast<std::size_t>(state.range(0)));
  eemd::EnvelopeWorkspace ws;
  std::vector<double> mean;
  for (auto _ : state) {
    eemd::local_mean(x, ws, mean);
    benchmark::DoNotOptimize(mean.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LocalMean)->RangeMultiplier(4)->Range(256, 16384);

void BM_Emd(benchmark::State& state) {
  const auto x = white_noise(static_cast<std::size_t>(state.range(0)));
  const auto params = eemd::DecompositionParams::emd_defaults();
  for (auto _ : state) {
    auto m = eemd::emd(x, params);
    benchmark::DoNotOptimize(m.data().data());
  }
}
BENCHMARK(BM_Emd)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_Eemd(benchmark::State& state) {
  const auto x = white_noise(1024);
  eemd::DecompositionParams params;
  params.ensemble_size = 50;
  params.rng_seed = 1;
  const eemd::EnsembleOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    auto m = eemd::eemd(x, params, options);
    benchmark::DoNotOptimize(m.data().data());
  }
}
BENCHMARK(BM_Eemd)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Ceemdan(benchmark::State& state) {
  const auto x = white_noise(1024);
  eemd::DecompositionParams params;
  params.ensemble_size = 50;
  params.rng_seed = 1;
  const eemd::EnsembleOptions options{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    auto m = eemd::ceemdan(x, params, options);
    benchmark::DoNotOptimize(m.data().data());
  }
}
BENCHMARK(BM_Ceemdan)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
