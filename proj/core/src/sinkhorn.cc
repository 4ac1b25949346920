// core/src/sinkhorn.cc

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

#include "otalign/sinkhorn.h"

#include <cmath>
#include <limits>
#include <sstream>

namespace otalign {

namespace {

// out(j) = log sum_i exp(mat(i, j) + add(i)), computed column by column with
// the max subtracted so the largest exponent is exactly zero.
void colwise_lse(const Matrix& mat, const Vector& add, Vector& out) {
  const Index rows = mat.rows();
  const Index cols = mat.cols();
  out.resize(cols);
  for (Index j = 0; j < cols; ++j) {
    double m = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < rows; ++i) {
      const double v = mat(i, j) + add(i);
      if (v > m) m = v;
    }
    double s = 0.0;
    for (Index i = 0; i < rows; ++i) {
      s += std::exp(mat(i, j) + add(i) - m);
    }
    out(j) = m + std::log(s);
  }
}

double marginal_violation(const Matrix& gamma, double p, double q) {
  double worst = 0.0;
  for (Index i = 0; i < gamma.rows(); ++i) {
    const double dev = std::abs(gamma.row(i).sum() - p);
    if (dev > worst) worst = dev;
  }
  for (Index j = 0; j < gamma.cols(); ++j) {
    const double dev = std::abs(gamma.col(j).sum() - q);
    if (dev > worst) worst = dev;
  }
  return worst;
}

}  // namespace

CouplingPlan sinkhorn(const CostMatrix& cost, const SinkhornConfig& config) {
  const Index m = cost.rows();
  const Index n = cost.cols();
  if (m < 1 || n < 1) {
    throw ValidationError("cost matrix must be non-empty");
  }
  if (!(config.epsilon > 0.0)) {
    std::ostringstream msg;
    msg << "epsilon must be positive, got " << config.epsilon;
    throw ValidationError(msg.str());
  }
  if (config.max_iters < 1) {
    throw ValidationError("max_iters must be at least 1");
  }
  if (!(config.tolerance > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  if (!cost.values.allFinite()) {
    throw ValidationError("cost matrix has non-finite entries");
  }

  const double p = 1.0 / static_cast<double>(m);
  const double q = 1.0 / static_cast<double>(n);
  const double log_p = -std::log(static_cast<double>(m));
  const double log_q = -std::log(static_cast<double>(n));

  // scaled(i, j) = -c(i, j) / epsilon; the transpose copy keeps both update
  // directions walking down columns.
  const Matrix scaled = -cost.values / config.epsilon;
  const Matrix scaled_t = scaled.transpose();

  Vector alpha = Vector::Zero(m);
  Vector beta = Vector::Zero(n);
  Vector lse_rows(m);  // log sum_j exp(scaled(i, j) + beta(j))
  Vector lse_cols(n);  // log sum_i exp(scaled(i, j) + alpha(i))

  colwise_lse(scaled_t, beta, lse_rows);

  CouplingPlan plan;
  plan.iterations_used = config.max_iters;
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    for (Index i = 0; i < m; ++i) alpha(i) = log_p - lse_rows(i);
    colwise_lse(scaled, alpha, lse_cols);
    for (Index j = 0; j < n; ++j) beta(j) = log_q - lse_cols(j);
    colwise_lse(scaled_t, beta, lse_rows);

    // After this half-sweep rows are exact up to rounding and columns carry
    // the remaining error, so checking both is cheap and safe.
    double worst = 0.0;
    for (Index i = 0; i < m; ++i) {
      const double dev = std::abs(std::exp(alpha(i) + lse_rows(i)) - p);
      if (dev > worst) worst = dev;
    }
    for (Index j = 0; j < n; ++j) {
      const double dev = std::abs(std::exp(beta(j) + lse_cols(j)) - q);
      if (dev > worst) worst = dev;
    }
    if (worst <= config.tolerance) {
      plan.iterations_used = iter;
      break;
    }
  }

  Matrix log_gamma = scaled;
  log_gamma.colwise() += alpha;
  log_gamma.rowwise() += beta.transpose();
  plan.gamma = log_gamma.array().exp();
  plan.row_marginal = Vector::Constant(m, p);
  plan.col_marginal = Vector::Constant(n, q);
  plan.final_violation = marginal_violation(plan.gamma, p, q);
  return plan;
}

double transport_cost(const CouplingPlan& plan, const CostMatrix& cost) {
  if (plan.gamma.rows() != cost.rows() || plan.gamma.cols() != cost.cols()) {
    throw ValidationError("coupling and cost shapes do not match");
  }
  return plan.gamma.cwiseProduct(cost.values).sum();
}

}  // namespace otalign
