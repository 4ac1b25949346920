// benchmarks/bench_cost.cc

#include <benchmark/benchmark.h>

#include "otalign/cost.h"
#include "otalign/synthetic.h"

namespace {

otalign::EmbeddingSequence MakeCloud(otalign::Index frames, otalign::Index dim,
                                     std::uint64_t seed) {
  otalign::ClusterSpec spec;
  spec.dim = dim;
  spec.centers.push_back(otalign::Vector::Ones(dim));
  spec.spread = 0.5;
  spec.frames_per_center = frames;
  spec.seed = seed;
  return otalign::generate(spec);
}

void BM_CosineCost(benchmark::State& state) {
  const auto m = static_cast<otalign::Index>(state.range(0));
  const auto n = static_cast<otalign::Index>(state.range(1));
  const auto source = MakeCloud(m, 64, 11);
  const auto target = MakeCloud(n, 64, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(otalign::cosine_cost(source, target));
  }
}
BENCHMARK(BM_CosineCost)->Args({50, 150})->Args({200, 600})->Args({500, 1500});

}  // namespace

BENCHMARK_MAIN();  // single main for the whole otalign_bench binary
