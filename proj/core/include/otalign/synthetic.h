// core/include/otalign/synthetic.h

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

#ifndef OTALIGN_SYNTHETIC_H_
#define OTALIGN_SYNTHETIC_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "otalign/projection.h"
#include "otalign/sinkhorn.h"
#include "otalign/types.h"

namespace otalign {

// Standard-normal sampler pinned to a fixed algorithm so that seeded runs
// reproduce across implementations: mt19937_64 drives uniforms built from
// the top 53 output bits, mapped to (0, 1], fed through the Box-Muller
// transform. std::normal_distribution is deliberately not used; its output
// is unspecified across standard libraries.
class PortableNormal {
 public:
  explicit PortableNormal(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  double next_uniform();  // (0, 1], 53-bit resolution

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Isotropic Gaussian clusters: frames_per_center frames around each center,
// drawn in round-robin center order (frame t uses centers[t % C]).
struct ClusterSpec {
  Index dim = 0;
  std::vector<Vector> centers;
  double spread = 1.0;  // isotropic standard deviation
  Index frames_per_center = 1;
  std::uint64_t seed = 0;
};

// Deterministic given the seed. A frame landing exactly on the origin is
// redrawn, so the output always satisfies EmbeddingSequence invariants.
EmbeddingSequence generate(const ClusterSpec& spec);

// Before/after view of one alignment run: how far the source sits from the
// target cloud, and how far the transported output sits from it, by nearest-
// neighbor cosine cost and by Frechet distance between Gaussian summaries.
struct AlignmentReport {
  Index source_frames = 0;
  Index target_frames = 0;
  double before_nearest_cost = 0.0;
  double after_nearest_cost = 0.0;
  double before_fad = 0.0;
  double after_fad = 0.0;
  int sinkhorn_iterations = 0;
  double sinkhorn_final_violation = 0.0;
};

AlignmentReport alignment_experiment(const ClusterSpec& source_spec,
                                     const ClusterSpec& target_spec,
                                     const SinkhornConfig& sinkhorn_config,
                                     const ProjectionConfig& projection_config);

// Flat key=value lines, one per field, consumable by plotting scripts.
std::string render_report(const AlignmentReport& report);

}  // namespace otalign

#endif  // OTALIGN_SYNTHETIC_H_
