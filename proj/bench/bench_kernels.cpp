#include <benchmark/benchmark.h>

#include <random>

#include "ilseq/correlation.hpp"
#include "ilseq/search.hpp"

namespace {

ilseq::BinarySequence random_sequence(std::size_t n) {
  std::mt19937_64 rng(n);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return ilseq::BinarySequence(bits);
}

void BM_SpectrumReference(benchmark::State& state) {
  const auto s = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ilseq::reference::autocorrelation_spectrum(s));
}

void BM_SpectrumKernel(benchmark::State& state) {
  const auto s = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ilseq::autocorrelation_spectrum(s));
}

void BM_SearchReference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ilseq::reference::exhaustive_search(n, ilseq::SearchTarget::Optimal));
  }
}

void BM_SearchKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ilseq::SearchOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ilseq::exhaustive_search(n, ilseq::SearchTarget::Optimal, options));
  }
}

}  // namespace

BENCHMARK(BM_SpectrumReference)->Arg(255)->Arg(1023)->Arg(4095)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumKernel)->Arg(255)->Arg(1023)->Arg(4095)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchReference)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchKernel)
    ->Args({13, 1})
    ->Args({15, 1})
    ->Args({20, 1})
    ->Args({20, 0})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
