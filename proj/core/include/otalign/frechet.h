// core/include/otalign/frechet.h

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

#ifndef OTALIGN_FRECHET_H_
#define OTALIGN_FRECHET_H_

#include "otalign/types.h"

namespace otalign {

// Gaussian summary of an embedding collection: sample mean and sample
// covariance (denominator count - 1, symmetrized).
struct GaussianStats {
  Vector mean;
  Matrix covariance;
  Index count = 0;
};

// Requires at least 2 frames.
GaussianStats gaussian_stats(const EmbeddingSequence& embeddings);

// Squared Frechet distance between the two Gaussians:
//
//   |mu_a - mu_b|^2 + Tr(Sa + Sb - 2 (Sa^{1/2} Sb Sa^{1/2})^{1/2})
//
// Matrix square roots go through symmetric eigendecompositions; eigenvalues
// below 1e-12 times the largest are treated as zero, which keeps
// rank-deficient covariances from short sequences well-defined.
double frechet_distance(const GaussianStats& a, const GaussianStats& b);

enum class PairwiseMode {
  kNearest,    // mean over a-frames of the min-over-b cosine cost
  kFramewise,  // mean cosine cost at matching indices; counts must agree
};

double mean_pairwise_cost(const EmbeddingSequence& a,
                          const EmbeddingSequence& b, PairwiseMode mode);

}  // namespace otalign

#endif  // OTALIGN_FRECHET_H_
