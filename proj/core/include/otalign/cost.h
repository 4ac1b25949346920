// core/include/otalign/cost.h

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

#ifndef OTALIGN_COST_H_
#define OTALIGN_COST_H_

#include "otalign/types.h"

namespace otalign {

// Dense pairwise cost between a source and a target sequence. Entries are
// 1 - cos(x_i, y_j), clamped to [0, 2] against rounding.
struct CostMatrix {
  Matrix values;  // M x N

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
};

// Throws ValidationError on dimension mismatch or zero-norm frames.
CostMatrix cosine_cost(const EmbeddingSequence& source,
                       const EmbeddingSequence& target);

}  // namespace otalign

#endif  // OTALIGN_COST_H_
