#include <benchmark/benchmark.h>

#include <vector>

#include "xgratio/xgratio.hpp"

using namespace xgratio;

namespace {

const RatioParams kParams(0.8, 1.3);

SampleBatch fixed_sample(std::size_t n) {
  numerics::Rng rng(numerics::RngSeed{2024});
  return ratio_sample(kParams, n, rng);
}

}  // namespace

static void BM_RatioPdf(benchmark::State& state) {
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_pdf(kParams, z));
    z = z < 100.0 ? z * 1.01 : 0.5;
  }
}
BENCHMARK(BM_RatioPdf);

static void BM_RatioCdf(benchmark::State& state) {
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_cdf(kParams, z));
    z = z < 100.0 ? z * 1.01 : 0.5;
  }
}
BENCHMARK(BM_RatioCdf);

static void BM_RatioQuantile(benchmark::State& state) {
  double prob = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_quantile(kParams, prob));
    prob = prob < 0.99 ? prob + 0.01 : 0.01;
  }
}
BENCHMARK(BM_RatioQuantile);

static void BM_RatioMoment(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_moment(kParams, MomentOrder(0.5)));
  }
}
BENCHMARK(BM_RatioMoment);

static void BM_RatioSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  numerics::Rng rng(numerics::RngSeed{1});
  for (auto _ : state) {
    auto batch = ratio_sample(kParams, n, rng, threads);
    benchmark::DoNotOptimize(batch.values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RatioSample)->Args({100000, 1})->Args({100000, 4})->UseRealTime();

static void BM_ShannonEntropy(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(shannon_entropy(kParams));
  }
}
BENCHMARK(BM_ShannonEntropy);

static void BM_RenyiEntropy(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi_entropy(kParams, EntropyOrder(2.0)));
  }
}
BENCHMARK(BM_RenyiEntropy);

static void BM_TruncatedMoment(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_moment(kParams, MomentOrder(0.5), 3.0, TruncationSide::right));
  }
}
BENCHMARK(BM_TruncatedMoment);

static void BM_LogLikelihood(benchmark::State& state) {
  const auto data = fixed_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_likelihood(kParams, data));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogLikelihood)->Arg(1000)->Arg(10000);

static void BM_FitMle(benchmark::State& state) {
  const auto data = fixed_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_mle(data).alpha_hat);
  }
}
BENCHMARK(BM_FitMle)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
