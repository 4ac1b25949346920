// core/src/projection.cc

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

#include "otalign/projection.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "otalign/cost.h"

namespace otalign {

namespace {

void check_shapes(const CouplingPlan& plan, const EmbeddingSequence& target) {
  if (plan.gamma.rows() < 1 || plan.gamma.cols() < 1) {
    throw ValidationError("coupling plan is empty");
  }
  if (plan.gamma.cols() != target.frame_count()) {
    std::ostringstream msg;
    msg << "coupling has " << plan.gamma.cols() << " columns but target has "
        << target.frame_count() << " frames";
    throw ValidationError(msg.str());
  }
  if (plan.gamma.minCoeff() < 0.0) {
    throw ValidationError("coupling plan has negative entries");
  }
}

[[noreturn]] void throw_zero_row(Index i) {
  std::ostringstream msg;
  msg << "coupling row " << i << " carries no mass, cannot project";
  throw ValidationError(msg.str());
}

}  // namespace

TransportResult project_full(const CouplingPlan& plan,
                             const EmbeddingSequence& target) {
  check_shapes(plan, target);
  const Index m = plan.gamma.rows();
  const Index n = plan.gamma.cols();

  TransportResult result;
  result.config.mode = ProjectionMode::kFull;
  result.config.k = static_cast<int>(n);
  result.transported.frames.resize(m, target.dim());
  result.transported.source_id = "transported";
  result.transported.frame_hop_ms = target.frame_hop_ms;
  result.support.resize(static_cast<std::size_t>(m));

  for (Index i = 0; i < m; ++i) {
    const double mass = plan.gamma.row(i).sum();
    if (mass <= 0.0) throw_zero_row(i);
    auto& row_support = result.support[static_cast<std::size_t>(i)];
    row_support.reserve(static_cast<std::size_t>(n));
    Vector out = Vector::Zero(target.dim());
    for (Index j = 0; j < n; ++j) {
      const double w = plan.gamma(i, j) / mass;
      row_support.push_back(SupportEntry{j, w});
      out += w * target.frames.row(j).transpose();
    }
    std::stable_sort(row_support.begin(), row_support.end(),
                     [](const SupportEntry& a, const SupportEntry& b) {
                       return a.weight > b.weight;
                     });
    result.transported.frames.row(i) = out.transpose();
  }
  return result;
}

TransportResult project_topk(const CouplingPlan& plan,
                             const EmbeddingSequence& target,
                             const ProjectionConfig& config) {
  check_shapes(plan, target);
  const Index m = plan.gamma.rows();
  const Index n = plan.gamma.cols();
  if (config.k < 1) {
    std::ostringstream msg;
    msg << "k must be at least 1, got " << config.k;
    throw ValidationError(msg.str());
  }
  const Index k = std::min<Index>(config.k, n);

  TransportResult result;
  result.config = config;
  result.config.mode = ProjectionMode::kTopK;
  result.transported.frames.resize(m, target.dim());
  result.transported.source_id = "transported";
  result.transported.frame_hop_ms = target.frame_hop_ms;
  result.support.resize(static_cast<std::size_t>(m));

  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < m; ++i) {
    std::iota(order.begin(), order.end(), Index{0});
    // Ties break toward the lower target index so the selection is stable.
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      return plan.gamma(i, a) > plan.gamma(i, b);
    });

    double mass = 0.0;
    for (Index r = 0; r < k; ++r) {
      mass += plan.gamma(i, order[static_cast<std::size_t>(r)]);
    }
    if (mass <= 0.0) throw_zero_row(i);

    auto& row_support = result.support[static_cast<std::size_t>(i)];
    row_support.reserve(static_cast<std::size_t>(k));
    Vector out = Vector::Zero(target.dim());
    for (Index r = 0; r < k; ++r) {
      const Index j = order[static_cast<std::size_t>(r)];
      const double w = plan.gamma(i, j) / mass;
      row_support.push_back(SupportEntry{j, w});
      out += w * target.frames.row(j).transpose();
    }
    result.transported.frames.row(i) = out.transpose();
  }
  return result;
}

TransportResult align(const EmbeddingSequence& source, const TargetPool& pool,
                      const SinkhornConfig& sinkhorn_config,
                      const ProjectionConfig& projection_config) {
  const EmbeddingSequence& target = pool.sequence;
  const CostMatrix cost = cosine_cost(source, target);
  const CouplingPlan plan = sinkhorn(cost, sinkhorn_config);
  TransportResult result =
      projection_config.mode == ProjectionMode::kFull
          ? project_full(plan, target)
          : project_topk(plan, target, projection_config);
  result.transported.source_id = source.source_id;
  result.transported.frame_hop_ms = source.frame_hop_ms
                                        ? source.frame_hop_ms
                                        : target.frame_hop_ms;
  result.sinkhorn = SinkhornDiagnostics{plan.iterations_used,
                                        plan.final_violation};
  return result;
}

}  // namespace otalign
