// benchmarks/bench_frechet.cc

#include <benchmark/benchmark.h>

#include "otalign/frechet.h"
#include "otalign/synthetic.h"

namespace {

otalign::EmbeddingSequence MakeCloud(otalign::Index dim, std::uint64_t seed) {
  otalign::ClusterSpec spec;
  spec.dim = dim;
  spec.centers.push_back(otalign::Vector::Ones(dim));
  spec.spread = 1.0;
  spec.frames_per_center = 4 * dim;
  spec.seed = seed;
  return otalign::generate(spec);
}

void BM_FrechetDistance(benchmark::State& state) {
  const auto dim = static_cast<otalign::Index>(state.range(0));
  const auto stats_a = otalign::gaussian_stats(MakeCloud(dim, 31));
  const auto stats_b = otalign::gaussian_stats(MakeCloud(dim, 32));
  for (auto _ : state) {
    benchmark::DoNotOptimize(otalign::frechet_distance(stats_a, stats_b));
  }
}
BENCHMARK(BM_FrechetDistance)->Arg(16)->Arg(64)->Arg(256)
    ->Unit(benchmark::kMillisecond);

}  // namespace
