// Copyright 2026 The conflictnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <random>

#include "conflictnet/analysis.h"
#include "conflictnet/equilibrium.h"
#include "conflictnet/error.h"
#include "conflictnet/examples.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace conflictnet {
namespace {

using testing::AllFamilies;
using testing::Family;
using testing::OracleSolveDe;
using testing::OracleSolveUeTotal;
using testing::RandomStructure;
using testing::RelDiff;

SemiSymmetricStructure Triangle(const ProductionFunction& pf) {
  ExampleOverrides o;
  o.production = pf;
  return *CheckSemiSymmetry(MakeTriangle(o)).structure;
}

SemiSymmetricStructure SingleDuel() {
  SemiSymmetricStructure ss;
  ss.classes = {{2, 1, 1.0, ProductionFunction::Power(1.0, 1.0)}};
  return ss;
}

TEST(SolveDeTest, TrianglePowerSplit) {
  const DeResult de = SolveDe(Triangle(ProductionFunction::Power(2.0, 0.5)));
  const double x = std::sqrt(9.25);
  EXPECT_NEAR(de.total, x, 1e-10 * x);
  ASSERT_EQ(de.sizes, (std::vector<int>{2, 3}));
  EXPECT_NEAR(de.efforts[0], 5.0 / (8.0 * x), 1e-10);
  EXPECT_NEAR(de.efforts[1], 8.0 / x, 1e-10);
}

TEST(SolveDeTest, TriangleRatio) {
  const DeResult de = SolveDe(Triangle(ProductionFunction::Ratio(1.0)));
  EXPECT_NEAR(de.total, 2.68415, 1e-4 * 2.68415);
}

TEST(SolveDeTest, SingleDuel) {
  const DeResult de = SolveDe(SingleDuel());
  EXPECT_NEAR(de.efforts[0], 0.5, 1e-10);
  EXPECT_NEAR(de.payoff, 0.375, 1e-10);
}

TEST(SolveUeTest, TrianglePower) {
  const UeResult ue = SolveUe(Triangle(ProductionFunction::Power(2.0, 0.5)));
  // 18.5 / (2x) = 9x
  EXPECT_NEAR(ue.effort, std::sqrt(18.5 / 18.0), 1e-10);
  EXPECT_NEAR(ue.total, std::sqrt(9.25), 1e-9);
}

TEST(SolveUeTest, TriangleRatioAndF3) {
  EXPECT_NEAR(SolveUe(Triangle(ProductionFunction::Ratio(1.0))).total, 3.03304,
              1e-4 * 3.03304);
  EXPECT_NEAR(SolveUe(Triangle(ProductionFunction::PiecewiseF3())).total,
              3.05522, 1e-4 * 3.05522);
}

TEST(SolveTest, InvalidStructure) {
  SemiSymmetricStructure ss = SingleDuel();
  ss.classes[0].prize = -1.0;
  EXPECT_THROW(SolveDe(ss), Error);
  EXPECT_THROW(SolveUe(ss), Error);
  ss.classes.clear();
  EXPECT_THROW(SolveDe(ss), Error);
}

// Result invariants and agreement with the closed-form-inverse oracles.
TEST(SolveTest, InvariantsAndOracles) {
  std::mt19937_64 rng(41);
  for (auto fam : AllFamilies()) {
    for (int i = 0; i < 60; ++i) {
      const auto ss = RandomStructure(rng, fam);
      const DeResult de = SolveDe(ss);
      double mu = 0.0;
      for (std::size_t k = 0; k < de.efforts.size(); ++k) {
        EXPECT_GT(de.efforts[k], 0.0);
        mu += ss.classes[k].degree * de.efforts[k];
      }
      EXPECT_NEAR(de.total, mu, 1e-10 * mu);
      EXPECT_NEAR(de.marginal_cost, ss.cost.Marginal(de.total),
                  1e-10 * de.marginal_cost);
      for (std::size_t k = 0; k < de.efforts.size(); ++k) {
        const auto& c = ss.classes[k];
        EXPECT_LE(std::abs(de.residuals[k]), 1e-8 * de.marginal_cost);
        const double via_h = c.prize * c.Weight() / c.production.H(de.efforts[k]);
        EXPECT_NEAR(via_h, de.marginal_cost, 1e-8 * de.marginal_cost);
      }
      const auto oracle = OracleSolveDe(ss);
      EXPECT_LT(RelDiff(de.total, oracle.total), 1e-8)
          << ss.classes[0].production.Describe();
      for (std::size_t k = 0; k < de.efforts.size(); ++k) {
        EXPECT_LT(RelDiff(de.efforts[k], oracle.efforts[k]), 1e-7);
      }

      const UeResult ue = SolveUe(ss);
      const double d = ss.TotalDegree();
      EXPECT_GT(ue.effort, 0.0);
      EXPECT_NEAR(ue.total, d * ue.effort, 1e-12 * ue.total);
      EXPECT_NEAR(ue.marginal_cost, ss.cost.Marginal(ue.total) * d,
                  1e-10 * ue.marginal_cost);
      EXPECT_LE(std::abs(ue.residual), 1e-8 * ue.marginal_cost);
      EXPECT_LT(RelDiff(ue.total, OracleSolveUeTotal(ss)), 1e-8);
    }
  }
}

// Payoffs from the p = 1/k identity match a full evaluation on a network.
TEST(SolveTest, PayoffMatchesNetworkEvaluation) {
  std::mt19937_64 rng(42);
  for (auto fam : AllFamilies()) {
    ExampleOverrides o;
    o.production = testing::RandomProduction(rng, fam);
    const auto net = MakeSimplex(o);
    const auto ss = *CheckSemiSymmetry(net).structure;
    const DeResult de = SolveDe(ss);
    const auto profile = SizeDeterminedProfile(net, de.EffortBySize());
    for (std::size_t i = 0; i < net.num_players(); ++i) {
      EXPECT_NEAR(PayoffByIndex(net, profile, i), de.payoff,
                  1e-10 * std::abs(de.payoff) + 1e-12);
      EXPECT_NEAR(profile.Total(net, i), de.total, 1e-12 * de.total);
    }
    // Equal treatment: every seat of a size-k battle wins with 1/k.
    for (std::size_t t = 0; t < net.num_battles(); ++t) {
      for (double p : WinningProbabilities(net.battle(t),
                                           profile.battle_efforts(t))) {
        EXPECT_NEAR(p, 1.0 / net.battle(t).size(), 1e-14);
      }
    }
  }
}

TEST(ReverseValuationsTest, TriangleExample) {
  const auto ss = Triangle(ProductionFunction::Power(2.0, 0.5));
  const double x = std::sqrt(9.25);
  const std::vector<double> targets = {5.0 / (8.0 * x), 8.0 / x};
  const auto v = ReverseValuations(ss, targets);
  EXPECT_NEAR(v[0], 5.0, 1e-12);
  EXPECT_NEAR(v[1], 72.0, 1e-12);
}

TEST(ReverseValuationsTest, DuelExample) {
  const std::vector<double> targets = {0.5};
  EXPECT_NEAR(ReverseValuations(SingleDuel(), targets)[0], 1.0, 1e-15);
}

TEST(ReverseValuationsTest, QuadraticHomogeneity) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  for (int i = 0; i < 50; ++i) {
    const auto ss = RandomStructure(rng, Family::kPower, true);
    std::vector<double> x(ss.classes.size());
    for (double& v : x) v = u(rng);
    const double t = u(rng);
    std::vector<double> tx = x;
    for (double& v : tx) v *= t;
    const auto v1 = ReverseValuations(ss, x);
    const auto v2 = ReverseValuations(ss, tx);
    for (std::size_t k = 0; k < x.size(); ++k) {
      EXPECT_NEAR(v2[k], t * t * v1[k], 1e-12 * v2[k]);
    }
  }
}

TEST(ReverseValuationsTest, RejectsBadTargets) {
  const std::vector<double> zero = {0.0};
  EXPECT_THROW(ReverseValuations(SingleDuel(), zero), Error);
  const std::vector<double> two = {1.0, 1.0};
  EXPECT_THROW(ReverseValuations(SingleDuel(), two), Error);
}

TEST(ReverseValuationsTest, RoundTripAllFamilies) {
  std::mt19937_64 rng(44);
  for (auto fam : AllFamilies()) {
    for (int i = 0; i < 50; ++i) {
      const auto ss = RandomStructure(rng, fam);
      std::vector<double> x(ss.classes.size());
      for (double& v : x) v = testing::LogUniform(rng, 0.01, 10.0);
      const auto v = ReverseValuations(ss, x);
      for (double p : v) EXPECT_GT(p, 0.0);
      const DeResult de = SolveDe(ss.WithPrizes(v));
      for (std::size_t k = 0; k < x.size(); ++k) {
        EXPECT_LT(RelDiff(de.efforts[k], x[k]), 1e-6);
      }
    }
  }
}

// Size-indexed power production: both regimes hit the closed form.
TEST(SolveTest, TullockClosedForm) {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> r(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    auto ss = RandomStructure(rng, Family::kPower, true);
    for (auto& c : ss.classes) {
      c.production = ProductionFunction::Power(1.0, 1.0 - r(rng) * 0.99);
    }
    const double closed = testing::OracleTullockTotal(ss);
    EXPECT_LT(RelDiff(SolveDe(ss).total, closed), 1e-8);
    EXPECT_LT(RelDiff(SolveUe(ss).total, closed), 1e-8);
    EXPECT_LT(RelDiff(TullockClosedFormTotal(ss), closed), 1e-14);
  }
}

TEST(SolveTest, LinearCost) {
  SemiSymmetricStructure ss = SingleDuel();
  ss.cost = CostFunction::Power(1.0, 1.0);
  // (1/4)/x = 1
  EXPECT_NEAR(SolveDe(ss).efforts[0], 0.25, 1e-10);
  EXPECT_NEAR(SolveUe(ss).effort, 0.25, 1e-10);
}

}  // namespace
}  // namespace conflictnet
