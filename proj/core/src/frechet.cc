// core/src/frechet.cc

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

#include "otalign/frechet.h"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "otalign/cost.h"

namespace otalign {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

// Symmetric positive semidefinite square root via eigendecomposition.
// Eigenvalues below kEigenvalueFloor times the largest are clamped to zero;
// slightly negative ones from rounding are clamped the same way.
Matrix psd_sqrt(const Matrix& sym) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed");
  }
  const Vector& values = solver.eigenvalues();
  const double largest = values.cwiseAbs().maxCoeff();
  const double floor = largest * kEigenvalueFloor;
  Vector roots(values.size());
  for (Index i = 0; i < values.size(); ++i) {
    roots(i) = values(i) > floor ? std::sqrt(values(i)) : 0.0;
  }
  return solver.eigenvectors() * roots.asDiagonal() *
         solver.eigenvectors().transpose();
}

void check_stats(const GaussianStats& stats, const char* name) {
  if (stats.mean.size() < 1) {
    throw ValidationError(std::string(name) + " has an empty mean");
  }
  if (stats.covariance.rows() != stats.mean.size() ||
      stats.covariance.cols() != stats.mean.size()) {
    throw ValidationError(std::string(name) +
                          " covariance shape does not match its mean");
  }
  if (!stats.mean.allFinite() || !stats.covariance.allFinite()) {
    throw ValidationError(std::string(name) + " has non-finite entries");
  }
}

}  // namespace

GaussianStats gaussian_stats(const EmbeddingSequence& embeddings) {
  embeddings.validate();
  const Index count = embeddings.frame_count();
  if (count < 2) {
    throw ValidationError("need at least 2 frames for a sample covariance");
  }
  GaussianStats stats;
  stats.count = count;
  stats.mean = embeddings.frames.colwise().mean().transpose();
  const Matrix centered = embeddings.frames.rowwise() - stats.mean.transpose();
  stats.covariance =
      (centered.transpose() * centered) / static_cast<double>(count - 1);
  stats.covariance = ((stats.covariance + stats.covariance.transpose()) / 2.0)
                         .eval();
  return stats;
}

double frechet_distance(const GaussianStats& a, const GaussianStats& b) {
  check_stats(a, "first operand");
  check_stats(b, "second operand");
  if (a.mean.size() != b.mean.size()) {
    std::ostringstream msg;
    msg << "dimension mismatch: " << a.mean.size() << " vs " << b.mean.size();
    throw ValidationError(msg.str());
  }

  const double mean_term = (a.mean - b.mean).squaredNorm();
  const Matrix root_a = psd_sqrt(a.covariance);
  const Matrix inner = root_a * b.covariance * root_a;
  const Matrix cross = psd_sqrt((inner + inner.transpose()) / 2.0);
  double value = mean_term + a.covariance.trace() + b.covariance.trace() -
                 2.0 * cross.trace();
  // The exact value is nonnegative; rounding can push a near-zero result
  // slightly below.
  if (value < 0.0) value = 0.0;
  return value;
}

double mean_pairwise_cost(const EmbeddingSequence& a,
                          const EmbeddingSequence& b, PairwiseMode mode) {
  const CostMatrix cost = cosine_cost(a, b);
  if (mode == PairwiseMode::kFramewise) {
    if (a.frame_count() != b.frame_count()) {
      std::ostringstream msg;
      msg << "framewise mode needs equal counts, got " << a.frame_count()
          << " and " << b.frame_count();
      throw ValidationError(msg.str());
    }
    return cost.values.diagonal().mean();
  }
  return cost.values.rowwise().minCoeff().mean();
}

}  // namespace otalign
