// core/include/otalign/projection.h

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

#ifndef OTALIGN_PROJECTION_H_
#define OTALIGN_PROJECTION_H_

#include <optional>
#include <vector>

#include "otalign/sinkhorn.h"
#include "otalign/types.h"

namespace otalign {

enum class ProjectionMode { kFull, kTopK };

struct ProjectionConfig {
  int k = 5;
  ProjectionMode mode = ProjectionMode::kTopK;
};

struct SupportEntry {
  Index target_index;
  double weight;
};

// A transported sequence plus, per source frame, the target frames it was
// averaged from. Support entries are sorted by weight descending (ties by
// ascending target index); weights are nonnegative and sum to 1, so each
// output frame is a convex combination of its referenced targets.
struct TransportResult {
  EmbeddingSequence transported;
  std::vector<std::vector<SupportEntry>> support;
  ProjectionConfig config;
  std::optional<SinkhornDiagnostics> sinkhorn;  // filled by align()
};

// Full barycentric projection: each source frame maps to the coupling-
// weighted average of all target frames, weights being the frame's gamma row
// normalized by its mass.
TransportResult project_full(const CouplingPlan& plan,
                             const EmbeddingSequence& target);

// Same map restricted to each frame's k highest-weight targets, weights
// renormalized within the selection. Equals project_full when k >= N.
// A gamma row with no mass cannot be renormalized and raises
// ValidationError; converged entropic plans never produce one.
TransportResult project_topk(const CouplingPlan& plan,
                             const EmbeddingSequence& target,
                             const ProjectionConfig& config);

// cosine_cost -> sinkhorn -> projection, with Sinkhorn diagnostics attached
// to the result.
TransportResult align(const EmbeddingSequence& source, const TargetPool& pool,
                      const SinkhornConfig& sinkhorn_config,
                      const ProjectionConfig& projection_config);

}  // namespace otalign

#endif  // OTALIGN_PROJECTION_H_
