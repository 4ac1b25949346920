// tests/otcore_test.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "otalign/cost.h"
#include "otalign/sinkhorn.h"
#include "testutil.h"

namespace otalign {
namespace {

using testing::make_sequence;
using testing::random_sequence;
using testing::uniform_range;

CostMatrix random_cost(std::mt19937_64& engine, Index m, Index n) {
  CostMatrix cost;
  cost.values.resize(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      cost.values(i, j) = uniform_range(engine, 0.0, 2.0);
    }
  }
  return cost;
}

// Exact optimum over permutation couplings for square cost matrices with
// uniform marginals: min over sigma of (1/n) sum_i c(i, sigma(i)).
double brute_force_optimum(const CostMatrix& cost) {
  const Index n = cost.rows();
  REQUIRE(cost.cols() == n);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (Index i = 0; i < n; ++i) {
      total += cost.values(i, perm[static_cast<std::size_t>(i)]);
    }
    best = std::min(best, total / static_cast<double>(n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double max_marginal_violation(const CouplingPlan& plan) {
  const double p = 1.0 / static_cast<double>(plan.gamma.rows());
  const double q = 1.0 / static_cast<double>(plan.gamma.cols());
  double worst = 0.0;
  for (Index i = 0; i < plan.gamma.rows(); ++i) {
    worst = std::max(worst, std::abs(plan.gamma.row(i).sum() - p));
  }
  for (Index j = 0; j < plan.gamma.cols(); ++j) {
    worst = std::max(worst, std::abs(plan.gamma.col(j).sum() - q));
  }
  return worst;
}

TEST_CASE("cosine cost on axis-aligned vectors") {
  const auto source = make_sequence({{1.0, 0.0}, {-2.0, 0.0}, {3.0, 3.0}});
  const auto target = make_sequence({{5.0, 0.0}, {0.0, 0.25}});
  const CostMatrix cost = cosine_cost(source, target);
  REQUIRE(cost.rows() == 3);
  REQUIRE(cost.cols() == 2);
  CHECK(cost.values(0, 0) == doctest::Approx(0.0).epsilon(1e-12));  // parallel
  CHECK(cost.values(0, 1) == doctest::Approx(1.0));  // orthogonal
  CHECK(cost.values(1, 0) == doctest::Approx(2.0));  // antiparallel
  CHECK(cost.values(1, 1) == doctest::Approx(1.0));
  // cos between (3,3) and (5,0) is 1/sqrt(2).
  CHECK(cost.values(2, 0) == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
  CHECK(cost.values(2, 1) == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
}

TEST_CASE("cosine cost stays inside [0, 2] and ignores scaling") {
  std::mt19937_64 engine(11);
  for (int round = 0; round < 20; ++round) {
    const auto source = random_sequence(engine, 6, 5, 0.0);
    auto scaled = source;
    scaled.frames *= 7.5;
    const auto target = random_sequence(engine, 4, 5, 0.0);
    const CostMatrix cost = cosine_cost(source, target);
    CHECK(cost.values.minCoeff() >= 0.0);
    CHECK(cost.values.maxCoeff() <= 2.0);
    const CostMatrix cost_scaled = cosine_cost(scaled, target);
    CHECK((cost.values - cost_scaled.values).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("cosine cost validates inputs") {
  const auto a = make_sequence({{1.0, 0.0}});
  const auto b = make_sequence({{1.0, 0.0, 0.0}});
  CHECK_THROWS_AS(cosine_cost(a, b), ValidationError);
  CHECK_THROWS_AS(cosine_cost(a, make_sequence({{0.0, 0.0}})),
                  ValidationError);
}

TEST_CASE("sinkhorn on a 1x1 problem puts all mass on the single pair") {
  CostMatrix cost;
  cost.values = Matrix::Constant(1, 1, 0.37);
  const CouplingPlan plan = sinkhorn(cost, SinkhornConfig{});
  REQUIRE(plan.gamma.rows() == 1);
  CHECK(plan.gamma(0, 0) == 1.0);
  CHECK(plan.iterations_used == 1);
  CHECK(plan.final_violation <= 1e-15);
}

TEST_CASE("sinkhorn on a constant cost matrix returns the product coupling") {
  CostMatrix cost;
  cost.values = Matrix::Constant(3, 5, 0.8);
  const CouplingPlan plan = sinkhorn(cost, SinkhornConfig{});
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 5; ++j) {
      CHECK(plan.gamma(i, j) == doctest::Approx(1.0 / 15.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("sinkhorn meets the marginal tolerance on random problems") {
  std::mt19937_64 engine(31);
  for (int round = 0; round < 50; ++round) {
    const Index m = 1 + static_cast<Index>(engine() % 10);
    const Index n = 1 + static_cast<Index>(engine() % 10);
    const CostMatrix cost = random_cost(engine, m, n);
    SinkhornConfig config;
    config.epsilon = (round % 2 == 0) ? 0.1 : 0.02;
    config.max_iters = 500000;  // the eps=0.02 rounds need roughly 180k
    const CouplingPlan plan = sinkhorn(cost, config);
    CHECK(plan.gamma.minCoeff() > 0.0);
    CHECK(plan.final_violation <= config.tolerance);
    CHECK(max_marginal_violation(plan) <=
          plan.final_violation + 1e-12);
    CHECK(plan.iterations_used <= config.max_iters);
    CHECK(plan.row_marginal.size() == m);
    CHECK(plan.col_marginal.size() == n);
    CHECK(plan.row_marginal(0) == 1.0 / static_cast<double>(m));
    CHECK(plan.col_marginal(0) == 1.0 / static_cast<double>(n));
  }
}

TEST_CASE("sinkhorn runs are bitwise reproducible") {
  std::mt19937_64 engine(41);
  const CostMatrix cost = random_cost(engine, 7, 5);
  const CouplingPlan a = sinkhorn(cost, SinkhornConfig{});
  const CouplingPlan b = sinkhorn(cost, SinkhornConfig{});
  CHECK(a.gamma == b.gamma);
  CHECK(a.iterations_used == b.iterations_used);
  CHECK(a.final_violation == b.final_violation);
}

TEST_CASE("transport cost approaches the assignment optimum as eps shrinks") {
  std::mt19937_64 engine(51);
  for (int round = 0; round < 20; ++round) {
    const Index n = 2 + static_cast<Index>(engine() % 5);
    const CostMatrix cost = random_cost(engine, n, n);
    const double optimum = brute_force_optimum(cost);

    SinkhornConfig config;
    config.epsilon = 0.005;
    config.max_iters = 1000000;  // mass splitting at this eps is slow to settle
    const CouplingPlan plan = sinkhorn(cost, config);
    REQUIRE(plan.final_violation <= config.tolerance);
    const double cost_entropic = transport_cost(plan, cost);
    // Marginal violation can push mass below a feasible coupling, so allow
    // a hair below the optimum too.
    CHECK(cost_entropic >= optimum - 1e-4);
    CHECK(cost_entropic <= optimum * 1.02 + 1e-9);

    SinkhornConfig loose;
    loose.epsilon = 0.5;
    const double cost_loose =
        transport_cost(sinkhorn(cost, loose), cost);
    CHECK(cost_entropic <= cost_loose + 1e-9);
  }
}

TEST_CASE("sinkhorn reports honestly when the iteration budget is too small") {
  std::mt19937_64 engine(61);
  const CostMatrix cost = random_cost(engine, 8, 8);
  SinkhornConfig config;
  config.epsilon = 0.005;
  config.max_iters = 2;
  config.tolerance = 1e-12;
  const CouplingPlan plan = sinkhorn(cost, config);
  CHECK(plan.iterations_used == 2);
  CHECK(plan.final_violation > config.tolerance);
  CHECK(plan.gamma.allFinite());
}

TEST_CASE("sinkhorn rejects broken configs and inputs") {
  CostMatrix cost;
  cost.values = Matrix::Constant(2, 2, 1.0);
  SinkhornConfig config;
  config.epsilon = 0.0;
  CHECK_THROWS_AS(sinkhorn(cost, config), ValidationError);
  config = SinkhornConfig{};
  config.max_iters = 0;
  CHECK_THROWS_AS(sinkhorn(cost, config), ValidationError);
  config = SinkhornConfig{};
  config.tolerance = 0.0;
  CHECK_THROWS_AS(sinkhorn(cost, config), ValidationError);
  cost.values(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sinkhorn(cost, SinkhornConfig{}), ValidationError);
  cost.values.resize(0, 2);
  CHECK_THROWS_AS(sinkhorn(cost, SinkhornConfig{}), ValidationError);
}

TEST_CASE("transport_cost checks shapes") {
  std::mt19937_64 engine(71);
  const CostMatrix cost = random_cost(engine, 3, 4);
  const CouplingPlan plan = sinkhorn(cost, SinkhornConfig{});
  const CostMatrix other = random_cost(engine, 4, 3);
  CHECK_THROWS_AS(transport_cost(plan, other), ValidationError);
  // Against its own cost it is just the weighted sum.
  const double direct = plan.gamma.cwiseProduct(cost.values).sum();
  CHECK(transport_cost(plan, cost) == direct);
}

TEST_CASE("smaller epsilon concentrates the coupling") {
  // Identity-favoring cost: the diagonal is cheap.
  CostMatrix cost;
  cost.values = Matrix::Constant(4, 4, 1.0);
  for (Index i = 0; i < 4; ++i) cost.values(i, i) = 0.05;

  SinkhornConfig sharp;
  sharp.epsilon = 0.01;
  SinkhornConfig blurry;
  blurry.epsilon = 1.0;
  const CouplingPlan plan_sharp = sinkhorn(cost, sharp);
  const CouplingPlan plan_blurry = sinkhorn(cost, blurry);
  CHECK(plan_sharp.gamma.diagonal().sum() >
        plan_blurry.gamma.diagonal().sum());
  CHECK(plan_sharp.gamma.diagonal().sum() == doctest::Approx(1.0).epsilon(1e-3));
}

}  // namespace
}  // namespace otalign
