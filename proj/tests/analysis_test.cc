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
#include "conflictnet/error.h"
#include "conflictnet/examples.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace conflictnet {
namespace {

using testing::Family;
using testing::RandomProduction;
using testing::RandomStructure;
using testing::RelDiff;

SemiSymmetricStructure Triangle(const ProductionFunction& pf) {
  ExampleOverrides o;
  o.production = pf;
  return *CheckSemiSymmetry(MakeTriangle(o)).structure;
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(ClassifyH(ProductionFunction::Ratio(1.0)).curvature,
            Curvature::kConvex);
  EXPECT_EQ(ClassifyH(ProductionFunction::Cara(1.0)).curvature,
            Curvature::kConvex);
  EXPECT_EQ(ClassifyH(ProductionFunction::PiecewiseF3()).curvature,
            Curvature::kConcave);
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto pf = ProductionFunction::Power(testing::LogUniform(rng, 1e-3, 1e3),
                                              1.0 - 0.999 * u(rng));
    const auto v = ClassifyH(pf);
    EXPECT_EQ(v.curvature, Curvature::kLinear) << pf.Describe();
    EXPECT_LE(std::abs(v.max_defect), 1e-9);
    EXPECT_LE(std::abs(v.min_defect), 1e-9);
  }
}

TEST(ClassifyTest, RandomFamiliesAgreeWithSampling) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 50; ++i) {
    for (auto [fam, want] : {std::pair{Family::kRatio, Curvature::kConvex},
                             std::pair{Family::kCara, Curvature::kConvex},
                             std::pair{Family::kPiecewise, Curvature::kConcave}}) {
      const auto pf = RandomProduction(rng, fam);
      const auto v = ClassifyH(pf);
      EXPECT_EQ(v.curvature, want) << pf.Describe();
      EXPECT_EQ(v.sampled, want) << pf.Describe();
      if (want == Curvature::kConvex) {
        EXPECT_EQ(v.third_negative, 0);
        EXPECT_GT(v.third_positive, 0);
      }
    }
  }
}

// A window that misses the kink sees only a linear piece: the sample and
// the family disagree, so no verdict.
TEST(ClassifyTest, ConflictingEvidenceIsIndeterminate) {
  const auto f3 = ProductionFunction::PiecewiseF3();
  const auto v = ClassifyH(f3, {2.0, 2000.0, 64, 1e-9});
  EXPECT_EQ(v.sampled, Curvature::kLinear);
  EXPECT_EQ(v.curvature, Curvature::kIndeterminate);
  // Affine-only piecewise with r = 1 is linear everywhere.
  EXPECT_EQ(ClassifyH(ProductionFunction::PiecewisePowerAffine(1, 1, 1)).curvature,
            Curvature::kLinear);
  EXPECT_THROW(ClassifyH(f3, {1e-3, 1e3, 63, 1e-9}), Error);
}

TEST(CompareTest, TableRows) {
  const auto f1 = CompareRegimes(Triangle(ProductionFunction::Ratio(1.0)));
  EXPECT_NEAR(f1.x_ue, 3.03304, 1e-4 * 3.03304);
  EXPECT_NEAR(f1.x_de, 2.68415, 1e-4 * 2.68415);
  EXPECT_EQ(f1.curvature, Curvature::kConvex);
  EXPECT_EQ(f1.ordering, Ordering::kLess);
  EXPECT_EQ(f1.consistent, true);
  EXPECT_EQ(f1.recommendation, Recommendation::kPreferUe);

  const auto f2 = CompareRegimes(Triangle(ProductionFunction::Power(2.0, 0.5)));
  EXPECT_LE(RelDiff(f2.x_de, f2.x_ue), 1e-8);
  EXPECT_EQ(f2.curvature, Curvature::kLinear);
  EXPECT_EQ(f2.ordering, Ordering::kEqual);
  EXPECT_EQ(f2.recommendation, Recommendation::kIndifferent);
  EXPECT_EQ(f2.consistent, true);

  const auto f3 = CompareRegimes(Triangle(ProductionFunction::PiecewiseF3()));
  EXPECT_NEAR(f3.x_ue, 3.05522, 1e-4 * 3.05522);
  EXPECT_NEAR(f3.x_de, 3.6833, 1e-4 * 3.6833);
  EXPECT_EQ(f3.curvature, Curvature::kConcave);
  EXPECT_EQ(f3.ordering, Ordering::kGreater);
  EXPECT_EQ(f3.consistent, true);
  EXPECT_EQ(f3.recommendation, Recommendation::kPreferDe);
}

// The ordering theorem and its payoff corollary over random structures.
TEST(CompareTest, OrderingPropertySuite) {
  std::mt19937_64 rng(63);
  for (auto fam : testing::AllFamilies()) {
    for (int i = 0; i < 100; ++i) {
      const auto ss = RandomStructure(rng, fam);
      const auto r = CompareRegimes(ss);
      ASSERT_TRUE(r.consistent.has_value());
      EXPECT_TRUE(*r.consistent) << r.structure.classes[0].production.Describe();
      const double slack = 1e-9 * r.x_ue;
      switch (fam) {
        case Family::kRatio:
        case Family::kCara:
          EXPECT_LE(r.x_de, r.x_ue + slack);
          EXPECT_GE(r.payoff_de, r.payoff_ue - 1e-9 * std::abs(r.payoff_ue));
          break;
        case Family::kPiecewise:
          EXPECT_GE(r.x_de, r.x_ue - slack);
          EXPECT_LE(r.payoff_de, r.payoff_ue + 1e-9 * std::abs(r.payoff_ue));
          break;
        case Family::kPower:
          EXPECT_LE(RelDiff(r.x_de, r.x_ue), 1e-8);
          break;
      }
    }
  }
}

TEST(CompareTest, HeterogeneousProduction) {
  SemiSymmetricStructure ss = Triangle(ProductionFunction::Power(1.0, 0.5));
  ss.classes[1].production = ProductionFunction::Power(2.0, 0.8);
  const auto powers = CompareRegimes(ss);
  EXPECT_FALSE(powers.verdict.has_value());
  EXPECT_EQ(powers.curvature, Curvature::kLinear);
  EXPECT_EQ(powers.consistent, true);

  ss.classes[1].production = ProductionFunction::Ratio(1.0);
  const auto mixed = CompareRegimes(ss);
  EXPECT_EQ(mixed.curvature, Curvature::kIndeterminate);
  EXPECT_FALSE(mixed.consistent.has_value());
  EXPECT_EQ(mixed.recommendation, Recommendation::kNone);
}

TEST(NeutralityTest, PowerIsNeutral) {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5; ++i) {
    const auto ss = Triangle(ProductionFunction::Power(1.0, 1.0 - 0.99 * u(rng)));
    const auto r = NeutralityCheck(ss, RandomValuationGrid(2, 50, i));
    EXPECT_TRUE(r.neutral);
    EXPECT_LE(r.max_gap, 1e-6);
    EXPECT_EQ(r.gaps.size(), 50u);
  }
}

TEST(NeutralityTest, RatioIsNotNeutral) {
  const auto ss = Triangle(ProductionFunction::Ratio(1.0));
  const auto r = NeutralityCheck(ss, {{1.0, 1.0}, {5.0, 72.0}});
  EXPECT_FALSE(r.neutral);
  EXPECT_EQ(r.worst_index, 1u);
  EXPECT_EQ(r.worst_prizes, (std::vector<double>{5.0, 72.0}));
  EXPECT_GE(r.max_gap, 0.1);
  EXPECT_NEAR(r.max_gap, (3.03304 - 2.68415) / 3.03304, 1e-4);
}

TEST(NeutralityTest, CaraHasAGap) {
  const auto ss = Triangle(ProductionFunction::Cara(1.0));
  EXPECT_FALSE(NeutralityCheck(ss, RandomValuationGrid(2, 20, 9)).neutral);
}

TEST(NeutralityTest, SimplexSizeIndexedPower) {
  auto ss = *CheckSemiSymmetry(MakeSimplex()).structure;
  ss.classes[0].production = ProductionFunction::Power(1.0, 0.3);
  ss.classes[1].production = ProductionFunction::Power(1.0, 0.6);
  ss.classes[2].production = ProductionFunction::Power(1.0, 0.9);
  EXPECT_TRUE(NeutralityCheck(ss, RandomValuationGrid(3, 50, 5)).neutral);
}

TEST(NeutralityTest, BadGrids) {
  const auto ss = Triangle(ProductionFunction::Ratio(1.0));
  EXPECT_THROW(NeutralityCheck(ss, {}), Error);
  EXPECT_THROW(NeutralityCheck(ss, {{1.0, -2.0}}), Error);
  EXPECT_THROW(NeutralityCheck(ss, {{1.0}}), Error);
}

TEST(NeutralityTest, SerialAndParallelAgree) {
  const auto ss = Triangle(ProductionFunction::Cara(0.5));
  const auto grid = RandomValuationGrid(2, 40, 17);
  const auto a = NeutralityCheck(ss, grid, {}, Execution::kSerial);
  const auto b = NeutralityCheck(ss, grid, {}, Execution::kParallel);
  EXPECT_EQ(a.gaps, b.gaps);
  EXPECT_EQ(a.worst_index, b.worst_index);
}

TEST(TullockTest, Examples) {
  EXPECT_NEAR(TullockClosedFormTotal(Triangle(ProductionFunction::Power(1, 0.5))),
              std::sqrt(9.25), 1e-14);
  SemiSymmetricStructure duel;
  duel.classes = {{2, 1, 1.0, ProductionFunction::Power(1.0, 1.0)}};
  EXPECT_DOUBLE_EQ(TullockClosedFormTotal(duel), 0.5);

  auto simplex = *CheckSemiSymmetry(MakeSimplex()).structure;
  const double r2 = 0.3, r3 = 0.6, r4 = 0.9, v2 = 2, v3 = 7, v4 = 40;
  simplex.classes[0] = {2, 2, v2, ProductionFunction::Power(1, r2)};
  simplex.classes[1] = {3, 3, v3, ProductionFunction::Power(1, r3)};
  simplex.classes[2] = {4, 1, v4, ProductionFunction::Power(1, r4)};
  EXPECT_NEAR(TullockClosedFormTotal(simplex),
              std::sqrt(v2 * r2 / 2 + 2 * v3 * r3 / 3 + 3 * v4 * r4 / 16),
              1e-14);
}

TEST(TullockTest, Preconditions) {
  auto ss = Triangle(ProductionFunction::Ratio(1.0));
  EXPECT_THROW(TullockClosedFormTotal(ss), Error);
  ss = Triangle(ProductionFunction::Power(1.0, 0.5));
  ss.cost = CostFunction::Power(2.0, 2.0);
  EXPECT_THROW(TullockClosedFormTotal(ss), Error);
}

}  // namespace
}  // namespace conflictnet
