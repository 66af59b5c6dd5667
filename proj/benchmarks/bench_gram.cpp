#include <benchmark/benchmark.h>

#include "specht/gram.hpp"
#include "specht/hooks.hpp"
#include "specht/smith.hpp"

namespace {

using specht::tableaux::Partition;

const std::vector<Partition>& shapes() {
  static const std::vector<Partition> s{Partition({3, 2}), Partition({3, 2, 1}), Partition({4, 2, 1}),
                                        Partition({3, 3, 2}), Partition({4, 3, 2})};
  return s;
}

void BM_GramMatrix(benchmark::State& state) {
  const auto& l = shapes()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(specht::gram::gram_matrix(l));
  state.SetLabel(l.to_string());
}
BENCHMARK(BM_GramMatrix)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SmithOverQ(benchmark::State& state) {
  const auto& l = shapes()[static_cast<std::size_t>(state.range(0))];
  const auto g = specht::gram::gram_matrix(l).entries;
  for (auto _ : state) {
    specht::snf::SmithSession s(g);
    benchmark::DoNotOptimize(s.over_q());
  }
  state.SetLabel(l.to_string());
}
BENCHMARK(BM_SmithOverQ)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SmithOverF2(benchmark::State& state) {
  const auto& l = shapes()[static_cast<std::size_t>(state.range(0))];
  const auto g = specht::gram::gram_matrix(l).entries;
  for (auto _ : state) {
    specht::snf::SmithSession s(g);
    benchmark::DoNotOptimize(s.over(specht::qlaurent::CoeffRing::prime_field(2)));
  }
  state.SetLabel(l.to_string());
}
BENCHMARK(BM_SmithOverF2)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SmithOverZ(benchmark::State& state) {
  const auto& l = shapes()[static_cast<std::size_t>(state.range(0))];
  const auto g = specht::gram::gram_matrix(l).entries;
  for (auto _ : state) {
    specht::snf::SmithSession s(g);
    benchmark::DoNotOptimize(s.over_z());
  }
  state.SetLabel(l.to_string());
}
BENCHMARK(BM_SmithOverZ)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MixedGramHook(benchmark::State& state) {
  const auto l = Partition::hook(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(specht::gram::mixed_gram(l));
  state.SetLabel(l.to_string());
}
BENCHMARK(BM_MixedGramHook)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
