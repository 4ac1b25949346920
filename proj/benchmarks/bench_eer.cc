// benchmarks/bench_eer.cc

#include <benchmark/benchmark.h>

#include "otalign/eer.h"
#include "otalign/synthetic.h"

namespace {

otalign::ScoreSet MakeScores(std::size_t trials, std::uint64_t seed) {
  otalign::PortableNormal normal(seed);
  otalign::ScoreSet scores;
  scores.trials.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const bool bonafide = (t % 2) == 0;
    scores.trials.push_back(otalign::Trial{
        bonafide ? otalign::TrialLabel::kBonafide
                 : otalign::TrialLabel::kSpoof,
        normal.next() + (bonafide ? 1.0 : -1.0)});
  }
  return scores;
}

void BM_ComputeEer(benchmark::State& state) {
  const auto scores =
      MakeScores(static_cast<std::size_t>(state.range(0)), 41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(otalign::compute_eer(scores));
  }
}
BENCHMARK(BM_ComputeEer)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
