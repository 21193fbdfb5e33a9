#include "affblocks/characters.hpp"
#include "affblocks/drinfeld.hpp"
#include "affblocks/hecke.hpp"
#include "affblocks/random.hpp"

#include <benchmark/benchmark.h>

using namespace affblocks;

static void BM_SameBlock(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomSource rng(11);
  std::vector<std::pair<DominantTuple, DominantTuple>> pairs;
  for (int k = 0; k < 64; ++k) pairs.emplace_back(rng.dominant_tuple(n, 12), rng.dominant_tuple(n, 12));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [q, p] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(same_block(q, p));
  }
}
BENCHMARK(BM_SameBlock)->Arg(2)->Arg(4)->Arg(8);

static void BM_ChFundamental(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Root a = atom_root("a");
  for (auto _ : state) benchmark::DoNotOptimize(ch_fundamental(n / 2, a, n));
}
BENCHMARK(BM_ChFundamental)->DenseRange(2, 12, 2);

static void BM_FactorizeLweight(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomSource rng(12);
  std::vector<SubsetWeight> weights;
  for (int k = 0; k < 64; ++k) weights.push_back(rng.subset(n));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize_lweight(weights[k++ % weights.size()], n));
}
BENCHMARK(BM_FactorizeLweight)->Arg(4)->Arg(8);

static void BM_SegmentsToDrinfeld(benchmark::State& state) {
  const auto r = state.range(0);
  RandomSource rng(13);
  std::vector<Multisegment> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(rng.multisegment(r, r));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segments_to_drinfeld(inputs[k++ % inputs.size()], static_cast<int>(r + 1)));
  }
}
BENCHMARK(BM_SegmentsToDrinfeld)->Arg(4)->Arg(8)->Arg(12);

static void BM_Decompose(benchmark::State& state) {
  RandomSource rng(14);
  std::vector<DominantTuple> inputs;
  for (int k = 0; k < 64; ++k) inputs.push_back(rng.dominant_tuple(8, static_cast<int>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decompose_fundamentals(inputs[k++ % inputs.size()]));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(12);

BENCHMARK_MAIN();
