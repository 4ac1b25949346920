// core/src/synthetic.cc

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

#include "otalign/synthetic.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "otalign/embed_io.h"
#include "otalign/frechet.h"
#include "otalign/manifest.h"

namespace otalign {

double PortableNormal::next_uniform() {
  // Top 53 bits of the engine output, shifted into (0, 1] so the log below
  // never sees zero.
  const std::uint64_t bits = engine_() >> 11;
  return static_cast<double>(bits + 1) * 0x1.0p-53;
}

double PortableNormal::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

EmbeddingSequence generate(const ClusterSpec& spec) {
  if (spec.dim < 1) {
    throw ValidationError("cluster dim must be at least 1");
  }
  if (spec.centers.empty()) {
    throw ValidationError("need at least one cluster center");
  }
  for (std::size_t c = 0; c < spec.centers.size(); ++c) {
    if (spec.centers[c].size() != spec.dim) {
      std::ostringstream msg;
      msg << "center " << c << " has dim " << spec.centers[c].size()
          << ", expected " << spec.dim;
      throw ValidationError(msg.str());
    }
    if (!spec.centers[c].allFinite()) {
      std::ostringstream msg;
      msg << "center " << c << " has non-finite entries";
      throw ValidationError(msg.str());
    }
  }
  if (!(spec.spread > 0.0) || !std::isfinite(spec.spread)) {
    throw ValidationError("spread must be finite and positive");
  }
  if (spec.frames_per_center < 1) {
    throw ValidationError("frames_per_center must be at least 1");
  }

  const Index num_centers = static_cast<Index>(spec.centers.size());
  const Index total = num_centers * spec.frames_per_center;
  PortableNormal normal(spec.seed);

  EmbeddingSequence seq;
  seq.frames.resize(total, spec.dim);
  {
    std::ostringstream id;
    id << "synthetic-" << spec.seed;
    seq.source_id = id.str();
  }

  for (Index t = 0; t < total; ++t) {
    const Vector& center =
        spec.centers[static_cast<std::size_t>(t % num_centers)];
    for (int attempt = 0;; ++attempt) {
      double norm_sq = 0.0;
      for (Index c = 0; c < spec.dim; ++c) {
        const double v = center(c) + spec.spread * normal.next();
        seq.frames(t, c) = v;
        norm_sq += v * v;
      }
      if (norm_sq > 0.0) break;
      if (attempt >= 64) {
        throw ValidationError(
            "cluster generation keeps landing exactly on the origin");
      }
    }
  }
  return seq;
}

AlignmentReport alignment_experiment(
    const ClusterSpec& source_spec, const ClusterSpec& target_spec,
    const SinkhornConfig& sinkhorn_config,
    const ProjectionConfig& projection_config) {
  const EmbeddingSequence source = generate(source_spec);
  const EmbeddingSequence target = generate(target_spec);

  TargetPool pool;
  pool.sequence = target;
  pool.provenance.emplace_back(target.source_id, target.frame_count());

  const GaussianStats target_stats = gaussian_stats(target);

  AlignmentReport report;
  report.source_frames = source.frame_count();
  report.target_frames = target.frame_count();
  report.before_nearest_cost =
      mean_pairwise_cost(source, target, PairwiseMode::kNearest);
  report.before_fad = frechet_distance(gaussian_stats(source), target_stats);

  const TransportResult result =
      align(source, pool, sinkhorn_config, projection_config);
  report.after_nearest_cost =
      mean_pairwise_cost(result.transported, target, PairwiseMode::kNearest);
  report.after_fad =
      frechet_distance(gaussian_stats(result.transported), target_stats);
  if (result.sinkhorn) {
    report.sinkhorn_iterations = result.sinkhorn->iterations_used;
    report.sinkhorn_final_violation = result.sinkhorn->final_violation;
  }
  return report;
}

std::string render_report(const AlignmentReport& report) {
  std::ostringstream out;
  out << "source_frames=" << report.source_frames << "\n"
      << "target_frames=" << report.target_frames << "\n"
      << "before_nearest_cost=" << format_double(report.before_nearest_cost)
      << "\n"
      << "after_nearest_cost=" << format_double(report.after_nearest_cost)
      << "\n"
      << "before_fad=" << format_double(report.before_fad) << "\n"
      << "after_fad=" << format_double(report.after_fad) << "\n"
      << "sinkhorn_iterations=" << report.sinkhorn_iterations << "\n"
      << "sinkhorn_final_violation="
      << format_double(report.sinkhorn_final_violation) << "\n";
  return out.str();
}

}  // namespace otalign
