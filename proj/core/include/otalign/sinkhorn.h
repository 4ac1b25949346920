// core/include/otalign/sinkhorn.h

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

#ifndef OTALIGN_SINKHORN_H_
#define OTALIGN_SINKHORN_H_

#include "otalign/cost.h"
#include "otalign/types.h"

namespace otalign {

struct SinkhornConfig {
  double epsilon = 0.1;     // entropic regularization strength
  int max_iters = 1000;
  double tolerance = 1e-6;  // max L-inf marginal violation
};

struct SinkhornDiagnostics {
  int iterations_used = 0;
  double final_violation = 0.0;
};

// Entropic coupling between uniform empirical marginals. gamma is M x N,
// nonnegative, with row sums ~ 1/M and column sums ~ 1/N; final_violation
// is the largest deviation actually achieved.
struct CouplingPlan {
  Matrix gamma;
  Vector row_marginal;  // p, uniform 1/M
  Vector col_marginal;  // q, uniform 1/N
  int iterations_used = 0;
  double final_violation = 0.0;
};

// Log-domain Sinkhorn iteration. Runs until the marginal violation drops
// below config.tolerance or config.max_iters is reached; non-convergence is
// not an error, the plan is returned with its diagnostics. Deterministic:
// identical inputs produce bitwise-identical plans.
//
// Throws ValidationError for non-finite cost entries or a non-positive
// epsilon / tolerance / max_iters.
CouplingPlan sinkhorn(const CostMatrix& cost, const SinkhornConfig& config);

// Expected transport cost <gamma, C>.
double transport_cost(const CouplingPlan& plan, const CostMatrix& cost);

}  // namespace otalign

#endif  // OTALIGN_SINKHORN_H_
