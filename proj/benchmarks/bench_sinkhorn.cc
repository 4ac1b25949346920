// benchmarks/bench_sinkhorn.cc

#include <benchmark/benchmark.h>

#include "otalign/cost.h"
#include "otalign/projection.h"
#include "otalign/sinkhorn.h"
#include "otalign/synthetic.h"

namespace {

otalign::CostMatrix MakeCost(otalign::Index m, otalign::Index n) {
  otalign::ClusterSpec spec;
  spec.dim = 64;
  spec.centers.push_back(otalign::Vector::Ones(64));
  spec.spread = 0.5;
  spec.frames_per_center = m;
  spec.seed = 21;
  const auto source = otalign::generate(spec);
  spec.frames_per_center = n;
  spec.seed = 22;
  const auto target = otalign::generate(spec);
  return otalign::cosine_cost(source, target);
}

void BM_Sinkhorn(benchmark::State& state) {
  const auto cost = MakeCost(static_cast<otalign::Index>(state.range(0)),
                             static_cast<otalign::Index>(state.range(1)));
  otalign::SinkhornConfig config;
  config.epsilon = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(otalign::sinkhorn(cost, config));
  }
}
BENCHMARK(BM_Sinkhorn)->Args({50, 150})->Args({200, 600})
    ->Unit(benchmark::kMillisecond);

void BM_ProjectTopK(benchmark::State& state) {
  const auto n = static_cast<otalign::Index>(state.range(1));
  const auto cost = MakeCost(static_cast<otalign::Index>(state.range(0)), n);
  otalign::SinkhornConfig config;
  config.epsilon = 0.1;
  const auto plan = otalign::sinkhorn(cost, config);

  otalign::ClusterSpec spec;
  spec.dim = 64;
  spec.centers.push_back(otalign::Vector::Ones(64));
  spec.spread = 0.5;
  spec.frames_per_center = n;
  spec.seed = 22;
  const auto target = otalign::generate(spec);

  otalign::ProjectionConfig projection;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        otalign::project_topk(plan, target, projection));
  }
}
BENCHMARK(BM_ProjectTopK)->Args({50, 150})->Args({200, 600})
    ->Unit(benchmark::kMillisecond);

}  // namespace
