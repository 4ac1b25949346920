// core/src/cost.cc

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

#include "otalign/cost.h"

#include <sstream>

namespace otalign {

CostMatrix cosine_cost(const EmbeddingSequence& source,
                       const EmbeddingSequence& target) {
  source.validate();
  target.validate();
  if (source.dim() != target.dim()) {
    std::ostringstream msg;
    msg << "dimension mismatch: source has dim " << source.dim()
        << ", target has dim " << target.dim();
    throw ValidationError(msg.str());
  }

  const Vector src_norms = source.frames.rowwise().norm();
  const Vector tgt_norms = target.frames.rowwise().norm();

  CostMatrix cost;
  cost.values.noalias() = source.frames * target.frames.transpose();
  for (Index i = 0; i < cost.values.rows(); ++i) {
    for (Index j = 0; j < cost.values.cols(); ++j) {
      const double sim = cost.values(i, j) / (src_norms(i) * tgt_norms(j));
      double c = 1.0 - sim;
      if (c < 0.0) c = 0.0;
      if (c > 2.0) c = 2.0;
      cost.values(i, j) = c;
    }
  }
  return cost;
}

}  // namespace otalign
