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

#include "conflictnet/cost.h"
#include "conflictnet/error.h"
#include "conflictnet/production.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace conflictnet {
namespace {

using testing::AllFamilies;
using testing::OracleH;
using testing::RandomProduction;

TEST(ProductionTest, PowerTwoSqrtHasLinearH) {
  const auto f2 = ProductionFunction::Power(2.0, 0.5);
  const ValidityReport report = ValidateProduction(f2);
  EXPECT_TRUE(report.ok());
  for (double x : SampleGrid{}.Points()) {
    EXPECT_NEAR(f2.H(x), 2.0 * x, 1e-12 * x);
  }
}

TEST(ProductionTest, IdentityAtOne) {
  EXPECT_DOUBLE_EQ(ProductionFunction::Power(1.0, 1.0).H(1.0), 1.0);
}

TEST(ProductionTest, RatioH) {
  const auto f1 = ProductionFunction::Ratio(1.0);
  EXPECT_TRUE(ValidateProduction(f1).ok());
  for (double x : SampleGrid{}.Points()) {
    EXPECT_NEAR(f1.H(x), x * (1.0 + x), 1e-12 * x * (1.0 + x));
  }
}

TEST(ProductionTest, F3Pieces) {
  const auto f3 = ProductionFunction::PiecewiseF3();
  EXPECT_DOUBLE_EQ(f3.Value(0.25), 1.0);
  EXPECT_DOUBLE_EQ(f3.Value(1.0), 2.0);
  EXPECT_DOUBLE_EQ(f3.Value(3.0), 4.0);
  EXPECT_DOUBLE_EQ(f3.Derivative(1.0), 1.0);
  EXPECT_DOUBLE_EQ(f3.H(0.5), 1.0);
  EXPECT_DOUBLE_EQ(f3.H(1.5), 2.5);
  ASSERT_EQ(f3.Kinks().size(), 1u);
  EXPECT_DOUBLE_EQ(f3.Kinks()[0], 1.0);
  EXPECT_TRUE(ValidateProduction(f3).ok());
  EXPECT_EQ(f3, ParseProduction("piecewise-f3"));
  EXPECT_EQ(f3, ParseProduction("piecewise:1,2,0.5"));
}

TEST(ProductionTest, ExplicitAffinePieceMustMatch) {
  EXPECT_NO_THROW(ProductionFunction::PiecewisePowerAffine(1, 2, 0.5, 1, 1));
  EXPECT_THROW(ProductionFunction::PiecewisePowerAffine(1, 2, 0.5, 1.1, 1),
               Error);
  EXPECT_THROW(ProductionFunction::PiecewisePowerAffine(1, 2, 0.5, 1, 0.9),
               Error);
}

TEST(ProductionTest, FactoriesRejectBadParameters) {
  EXPECT_THROW(ProductionFunction::Power(0.0, 0.5), Error);
  EXPECT_THROW(ProductionFunction::Power(1.0, 1.5), Error);
  EXPECT_THROW(ProductionFunction::Power(1.0, 0.0), Error);
  EXPECT_THROW(ProductionFunction::Ratio(-1.0), Error);
  EXPECT_THROW(ProductionFunction::Cara(0.0), Error);
  EXPECT_THROW(ProductionFunction::Power(NAN, 0.5), Error);
}

TEST(ProductionTest, ParseRoundTripsDescribe) {
  for (const char* text :
       {"power:2,0.5", "ratio:1", "cara:1.5", "piecewise:2,1,0.25"}) {
    const auto pf = ParseProduction(text);
    EXPECT_EQ(pf.Describe(), text);
    EXPECT_EQ(ParseProduction(pf.Describe()), pf);
  }
  for (const char* bad : {"", "power", "power:1", "power:a,b", "gauss:1",
                          "ratio:1,2", "exp:1"}) {
    try {
      ParseProduction(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSchemaError) << bad;
    }
  }
}

TEST(ProductionTest, ZeroAtOrigin) {
  std::mt19937_64 rng(11);
  for (auto fam : AllFamilies()) {
    for (int i = 0; i < 20; ++i) {
      EXPECT_EQ(RandomProduction(rng, fam).Value(0.0), 0.0);
    }
  }
}

// Analytic derivatives against central differences and the closed-form h.
TEST(ProductionTest, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(12);
  for (auto fam : AllFamilies()) {
    for (int i = 0; i < 20; ++i) {
      const auto pf = RandomProduction(rng, fam);
      for (double x : {0.013, 0.37, 1.9, 7.3}) {
        bool near_kink = false;
        for (double k : pf.Kinks()) near_kink |= std::abs(x - k) < 1e-3 * k + 1e-4;
        if (near_kink) continue;
        const double e = 1e-5 * x;
        auto cd = [&](auto g) { return (g(x + e) - g(x - e)) / (2 * e); };
        const double d1 = cd([&](double t) { return pf.Value(t); });
        const double d2 = cd([&](double t) { return pf.Derivative(t); });
        const double d3 = cd([&](double t) { return pf.SecondDerivative(t); });
        const double dh = cd([&](double t) { return pf.H(t); });
        auto tol = [](double v) { return 1e-5 * std::abs(v) + 1e-9; };
        EXPECT_NEAR(pf.Derivative(x), d1, tol(d1)) << pf.Describe() << " " << x;
        EXPECT_NEAR(pf.SecondDerivative(x), d2, tol(d2)) << pf.Describe();
        EXPECT_NEAR(pf.ThirdDerivative(x), d3, tol(d3)) << pf.Describe();
        EXPECT_NEAR(pf.HDerivative(x), dh, tol(dh)) << pf.Describe();
        EXPECT_NEAR(pf.H(x), OracleH(pf, x), 1e-12 * OracleH(pf, x));
      }
    }
  }
}

// Every validated function has strictly increasing h on its grid.
TEST(ProductionTest, ValidatedHIsIncreasing) {
  std::mt19937_64 rng(13);
  for (auto fam : AllFamilies()) {
    for (int i = 0; i < 25; ++i) {
      const auto pf = RandomProduction(rng, fam);
      const SampleGrid grid = DefaultGridFor(pf);
      const ValidityReport report = ValidateProduction(pf, grid);
      ASSERT_TRUE(report.ok()) << pf.Describe();
      const auto xs = grid.Points();
      for (std::size_t j = 1; j < xs.size(); ++j) {
        EXPECT_LT(pf.H(xs[j - 1]), pf.H(xs[j])) << pf.Describe();
      }
    }
  }
}

TEST(ProductionTest, ValidationReportsEveryCheck) {
  const auto pf = ProductionFunction::Cara(2.0);
  const ValidityReport r = ValidateProduction(pf, DefaultGridFor(pf));
  for (const char* name : {"f_zero", "f_prime_positive", "f_second_nonpositive",
                           "h_strictly_increasing", "h_vanishes_at_zero"}) {
    ASSERT_NE(r.Find(name), nullptr) << name;
    EXPECT_TRUE(r.Find(name)->passed) << name;
  }
}

TEST(ProductionTest, GridPreconditions) {
  const auto pf = ProductionFunction::Ratio(1.0);
  EXPECT_THROW(ValidateProduction(pf, {1e-6, 1e3, 31}), Error);
  EXPECT_THROW(ValidateProduction(pf, {1e-2, 10.0, 64}), Error);  // 3 decades
  EXPECT_THROW(ValidateProduction(pf, {0.0, 10.0, 64}), Error);
}

TEST(ProductionTest, NonFiniteEvaluationIsAnError) {
  const auto pf = ProductionFunction::Power(1e308, 1.0);
  try {
    ValidateProduction(pf, {1e-6, 1e3, 64});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteEvaluation);
  }
}

TEST(CostTest, QuadraticValues) {
  const auto c = CostFunction::Quadratic();
  EXPECT_DOUBLE_EQ(c.Value(3.0), 4.5);
  EXPECT_DOUBLE_EQ(c.Marginal(3.0), 3.0);
  EXPECT_DOUBLE_EQ(c.Curvature(3.0), 1.0);
  EXPECT_TRUE(c.IsUnitQuadratic());
  const auto cubic = CostFunction::Power(2.0, 3.0);
  EXPECT_DOUBLE_EQ(cubic.Value(2.0), 2.0 * 8.0 / 3.0);
  EXPECT_DOUBLE_EQ(cubic.Marginal(2.0), 8.0);
  EXPECT_FALSE(cubic.IsUnitQuadratic());
  EXPECT_THROW(CostFunction::Power(1.0, 0.5), Error);
  EXPECT_THROW(CostFunction::Power(0.0, 2.0), Error);
}

}  // namespace
}  // namespace conflictnet
