// tests/transport_test.cc

// Copyright 2026  OTAlign Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "otalign/cost.h"
#include "otalign/embed_io.h"
#include "otalign/projection.h"
#include "otalign/sinkhorn.h"
#include "testutil.h"

namespace otalign {
namespace {

using testing::make_sequence;
using testing::random_sequence;
using testing::uniform_range;

// A coupling whose rows sum exactly to 1/m, mass spread randomly.
CouplingPlan random_plan(std::mt19937_64& engine, Index m, Index n) {
  CouplingPlan plan;
  plan.gamma.resize(m, n);
  for (Index i = 0; i < m; ++i) {
    double total = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double w = uniform_range(engine, 0.01, 1.0);
      plan.gamma(i, j) = w;
      total += w;
    }
    plan.gamma.row(i) *= 1.0 / (static_cast<double>(m) * total);
  }
  plan.row_marginal = Vector::Constant(m, 1.0 / static_cast<double>(m));
  plan.col_marginal = Vector::Constant(n, 1.0 / static_cast<double>(n));
  return plan;
}

TEST_CASE("full projection is the row-normalized weighted average") {
  std::mt19937_64 engine(3);
  const Index m = 4;
  const Index n = 6;
  const auto target = random_sequence(engine, n, 3);
  const CouplingPlan plan = random_plan(engine, m, n);

  const TransportResult result = project_full(plan, target);
  REQUIRE(result.transported.frame_count() == m);
  REQUIRE(result.transported.dim() == 3);

  for (Index i = 0; i < m; ++i) {
    const double mass = plan.gamma.row(i).sum();
    Vector expected = Vector::Zero(3);
    for (Index j = 0; j < n; ++j) {
      expected += (plan.gamma(i, j) / mass) * target.frames.row(j).transpose();
    }
    for (Index c = 0; c < 3; ++c) {
      CHECK(result.transported.frames(i, c) ==
            doctest::Approx(expected(c)).epsilon(1e-12));
    }
    REQUIRE(result.support[static_cast<std::size_t>(i)].size() ==
            static_cast<std::size_t>(n));
  }
}

TEST_CASE("topk with k=1 snaps to the heaviest target frame") {
  std::mt19937_64 engine(13);
  const auto target = random_sequence(engine, 5, 4);
  const CouplingPlan plan = random_plan(engine, 3, 5);

  ProjectionConfig config;
  config.k = 1;
  const TransportResult result = project_topk(plan, target, config);
  for (Index i = 0; i < 3; ++i) {
    Index heaviest = 0;
    plan.gamma.row(i).maxCoeff(&heaviest);
    const auto& support = result.support[static_cast<std::size_t>(i)];
    REQUIRE(support.size() == 1);
    CHECK(support[0].target_index == heaviest);
    CHECK(support[0].weight == 1.0);
    CHECK(result.transported.frames.row(i) == target.frames.row(heaviest));
  }
}

TEST_CASE("topk weights are sorted, nonnegative, and sum to one") {
  std::mt19937_64 engine(23);
  for (int round = 0; round < 30; ++round) {
    const Index m = 1 + static_cast<Index>(engine() % 6);
    const Index n = 1 + static_cast<Index>(engine() % 9);
    const int k = 1 + static_cast<int>(engine() % 9);
    const auto target = random_sequence(engine, n, 4);
    const CouplingPlan plan = random_plan(engine, m, n);

    ProjectionConfig config;
    config.k = k;
    const TransportResult result = project_topk(plan, target, config);
    for (const auto& support : result.support) {
      REQUIRE(static_cast<Index>(support.size()) ==
              std::min<Index>(k, n));
      double total = 0.0;
      for (std::size_t r = 0; r < support.size(); ++r) {
        CHECK(support[r].weight >= 0.0);
        if (r > 0) CHECK(support[r - 1].weight >= support[r].weight);
        total += support[r].weight;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("topk equals full when k covers the whole pool") {
  std::mt19937_64 engine(33);
  for (int round = 0; round < 40; ++round) {
    const Index m = 1 + static_cast<Index>(engine() % 6);
    const Index n = 1 + static_cast<Index>(engine() % 8);
    const auto target = random_sequence(engine, n, 5);
    const CouplingPlan plan = random_plan(engine, m, n);

    ProjectionConfig config;
    config.k = static_cast<int>(n) + static_cast<int>(engine() % 3);
    const TransportResult topk = project_topk(plan, target, config);
    const TransportResult full = project_full(plan, target);
    const double worst = (topk.transported.frames - full.transported.frames)
                             .cwiseAbs()
                             .maxCoeff();
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("ties in a gamma row resolve to the lower target index") {
  CouplingPlan plan;
  plan.gamma.resize(1, 4);
  plan.gamma << 0.25, 0.25, 0.25, 0.25;
  plan.row_marginal = Vector::Constant(1, 1.0);
  plan.col_marginal = Vector::Constant(4, 0.25);
  const auto target =
      make_sequence({{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}});

  ProjectionConfig config;
  config.k = 2;
  const TransportResult result = project_topk(plan, target, config);
  REQUIRE(result.support[0].size() == 2);
  CHECK(result.support[0][0].target_index == 0);
  CHECK(result.support[0][1].target_index == 1);
  CHECK(result.transported.frames(0, 0) == doctest::Approx(1.5));
}

TEST_CASE("projection rejects degenerate inputs") {
  std::mt19937_64 engine(43);
  const auto target = random_sequence(engine, 4, 3);
  CouplingPlan plan = random_plan(engine, 2, 4);

  SUBCASE("zero-mass row, both modes") {
    plan.gamma.row(1).setZero();
    CHECK_THROWS_AS(project_full(plan, target), ValidationError);
    ProjectionConfig config;
    CHECK_THROWS_AS(project_topk(plan, target, config), ValidationError);
  }
  SUBCASE("negative coupling entry") {
    plan.gamma(0, 1) = -1e-9;
    CHECK_THROWS_AS(project_full(plan, target), ValidationError);
  }
  SUBCASE("column count vs target mismatch") {
    const auto short_target = random_sequence(engine, 3, 3);
    CHECK_THROWS_AS(project_full(plan, short_target), ValidationError);
  }
  SUBCASE("k below one") {
    ProjectionConfig config;
    config.k = 0;
    CHECK_THROWS_AS(project_topk(plan, target, config), ValidationError);
  }
}

TEST_CASE("transported frames stay inside the selected targets' box") {
  std::mt19937_64 engine(53);
  for (int round = 0; round < 20; ++round) {
    const Index n = 3 + static_cast<Index>(engine() % 6);
    const auto target = random_sequence(engine, n, 4);
    const CouplingPlan plan = random_plan(engine, 5, n);
    ProjectionConfig config;
    config.k = 3;
    const TransportResult result = project_topk(plan, target, config);
    for (Index i = 0; i < 5; ++i) {
      const auto& support = result.support[static_cast<std::size_t>(i)];
      Vector lo = Vector::Constant(4, std::numeric_limits<double>::infinity());
      Vector hi = -lo;
      for (const SupportEntry& entry : support) {
        lo = lo.cwiseMin(target.frames.row(entry.target_index).transpose());
        hi = hi.cwiseMax(target.frames.row(entry.target_index).transpose());
      }
      for (Index c = 0; c < 4; ++c) {
        CHECK(result.transported.frames(i, c) >= lo(c) - 1e-12);
        CHECK(result.transported.frames(i, c) <= hi(c) + 1e-12);
      }
    }
  }
}

TEST_CASE("align wires cost, solver, and projection together") {
  std::mt19937_64 engine(63);
  const auto source = random_sequence(engine, 6, 4, 1.0, "src");
  const auto utterance = random_sequence(engine, 9, 4, 1.0, "utt");
  const TargetPool pool = build_pool({utterance}, PoolOrder::kAsGiven);

  const TransportResult result =
      align(source, pool, SinkhornConfig{}, ProjectionConfig{});
  REQUIRE(result.transported.frame_count() == 6);
  REQUIRE(result.transported.dim() == 4);
  CHECK(result.transported.source_id == "src");
  REQUIRE(result.sinkhorn.has_value());
  CHECK(result.sinkhorn->iterations_used >= 1);
  CHECK(result.sinkhorn->final_violation <= 1e-6);
  for (const auto& support : result.support) {
    CHECK(support.size() == 5);  // default k
  }

  // Determinism end to end.
  const TransportResult again =
      align(source, pool, SinkhornConfig{}, ProjectionConfig{});
  CHECK(again.transported.frames == result.transported.frames);
}

TEST_CASE("aligning a cloud to itself roughly reproduces it") {
  std::mt19937_64 engine(73);
  const auto cloud = random_sequence(engine, 12, 3, 2.0, "cloud");
  const TargetPool pool = build_pool({cloud}, PoolOrder::kAsGiven);

  SinkhornConfig config;
  config.epsilon = 0.01;  // sharp coupling, near-identity map
  ProjectionConfig projection;
  projection.k = 1;
  const TransportResult result = align(cloud, pool, config, projection);
  // With k=1 every output frame must be one of the target frames.
  for (Index i = 0; i < result.transported.frame_count(); ++i) {
    bool matched = false;
    for (Index j = 0; j < cloud.frame_count(); ++j) {
      if (result.transported.frames.row(i) == cloud.frames.row(j)) {
        matched = true;
        break;
      }
    }
    CHECK(matched);
  }
}

}  // namespace
}  // namespace otalign
