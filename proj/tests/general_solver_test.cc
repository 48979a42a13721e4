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


#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "conflictnet/equilibrium.h"
#include "conflictnet/error.h"
#include "conflictnet/examples.h"
#include "conflictnet/general_solver.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace conflictnet {
namespace {

using testing::AllFamilies;
using testing::RandomProduction;

ConflictNetwork WithProduction(const std::string& name,
                               const ProductionFunction& pf) {
  ExampleOverrides o;
  o.production = pf;
  return GenerateExample(name, o);
}

ConflictNetwork TwoSharedBattles() {
  const auto pf = ProductionFunction::Power(1.0, 1.0);
  return ConflictNetwork::Create(
      {1, 2}, {{"a", {1, 2}, 1.0, pf}, {"b", {2, 1}, 1.0, pf}},
      CostFunction::Quadratic());
}

TEST(BestResponseTest, DuelAtHalf) {
  const auto net = MakeDuel();
  const auto profile = EffortProfile::Constant(net, 0.5);
  const BestResponse br = ComputeBestResponse(net, 1, profile);
  ASSERT_EQ(br.efforts.size(), 1u);
  EXPECT_NEAR(br.efforts[0], 0.5, 1e-12);
  EXPECT_NEAR(ComputeUniformBestResponse(net, 2, profile), 0.5, 1e-12);
}

TEST(BestResponseTest, HugeRivalsGiveNearZero) {
  ExampleOverrides o;
  o.prize_by_size = {{2, 0.01}, {3, 0.01}};
  o.production = ProductionFunction::Power(1.0, 1.0);
  const auto net = MakeTriangle(o);
  const auto profile = EffortProfile::Constant(net, 1e6);
  const BestResponse br = ComputeBestResponse(net, 1, profile);
  for (double x : br.efforts) EXPECT_LT(x, 1e-6);
}

TEST(BestResponseTest, FixedPointAtDe) {
  for (auto pf : {ProductionFunction::Power(2.0, 0.5),
                  ProductionFunction::Ratio(1.0),
                  ProductionFunction::PiecewiseF3(),
                  ProductionFunction::Cara(1.0)}) {
    const auto net = WithProduction("triangle", pf);
    const auto ss = *CheckSemiSymmetry(net).structure;
    const auto profile = SizeDeterminedProfile(net, SolveDe(ss).EffortBySize());
    for (std::size_t i = 0; i < net.num_players(); ++i) {
      const auto br = ComputeBestResponse(net, net.players()[i], profile);
      const auto own = profile.PlayerEfforts(net, i);
      for (std::size_t s = 0; s < own.size(); ++s) {
        EXPECT_NEAR(br.efforts[s], own[s], 1e-6) << pf.Describe();
      }
    }
  }
}

// Rival permutations inside a battle leave the best response unchanged.
TEST(BestResponseTest, RivalPermutationInvariance) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.05, 3.0);
  for (auto fam : AllFamilies()) {
    const auto net = WithProduction("simplex", RandomProduction(rng, fam));
    for (int trial = 0; trial < 5; ++trial) {
      EffortProfile profile = EffortProfile::Zero(net);
      for (std::size_t t = 0; t < net.num_battles(); ++t) {
        for (std::size_t s = 0; s < net.battle(t).participants.size(); ++s) {
          profile.set(t, s, u(rng));
        }
      }
      const auto base = ComputeBestResponse(net, 1, profile);
      // Swap the rival seats (skip player 1's own seat) in every battle.
      EffortProfile swapped = profile;
      for (std::size_t t = 0; t < net.num_battles(); ++t) {
        std::vector<std::size_t> rivals;
        for (std::size_t s = 0; s < net.battle(t).participants.size(); ++s) {
          if (net.battle(t).participants[s] != 1) rivals.push_back(s);
        }
        if (rivals.size() < 2) continue;
        const double first = profile.at(t, rivals.front());
        for (std::size_t j = 0; j + 1 < rivals.size(); ++j) {
          swapped.set(t, rivals[j], profile.at(t, rivals[j + 1]));
        }
        swapped.set(t, rivals.back(), first);
      }
      const auto perm = ComputeBestResponse(net, 1, swapped);
      for (std::size_t s = 0; s < base.efforts.size(); ++s) {
        EXPECT_NEAR(perm.efforts[s], base.efforts[s],
                    1e-10 * std::max(1.0, base.efforts[s]));
      }
    }
  }
}

TEST(BestResponseTest, DegenerateBattle) {
  const auto net = MakeDuel();
  const auto zero = EffortProfile::Zero(net);
  const BestResponse br = ComputeBestResponse(net, 1, zero);
  EXPECT_EQ(br.efforts[0], kFloorEffort);
  EXPECT_EQ(br.degenerate_battles, (std::vector<std::size_t>{0}));
  try {
    ComputeBestResponse(net, 1, zero, {}, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateBattle);
  }
  EXPECT_THROW(ComputeBestResponse(net, 7, zero), Error);
}

TEST(IterativeTest, TriangleExamples) {
  IterationConfig cfg;
  const auto f2 = SolveNashIterative(
      WithProduction("triangle", ProductionFunction::Power(2.0, 0.5)), cfg);
  ASSERT_TRUE(f2.converged);
  for (double t : f2.totals) EXPECT_NEAR(t, 3.04138, 1e-4);
  const auto f1 = SolveNashIterative(
      WithProduction("triangle", ProductionFunction::Ratio(1.0)), cfg);
  ASSERT_TRUE(f1.converged);
  for (double t : f1.totals) EXPECT_NEAR(t, 2.68415, 1e-3 * 2.68415);
  const auto f3 = SolveNashUeIterative(
      WithProduction("triangle", ProductionFunction::PiecewiseF3()), cfg);
  ASSERT_TRUE(f3.converged);
  for (double t : f3.totals) EXPECT_NEAR(t, 3.05522, 1e-3 * 3.05522);
}

TEST(IterativeTest, StartAtEquilibrium) {
  for (const char* name : {"triangle", "simplex"}) {
    for (auto pf : {ProductionFunction::Power(2.0, 0.5),
                    ProductionFunction::Ratio(1.0),
                    ProductionFunction::PiecewiseF3(),
                    ProductionFunction::Cara(1.0)}) {
      const auto net = WithProduction(name, pf);
      const auto ss = *CheckSemiSymmetry(net).structure;
      IterationConfig cfg;
      cfg.initial = InitialProfile::Explicit(
          SizeDeterminedProfile(net, SolveDe(ss).EffortBySize()));
      const auto out = SolveNashIterative(net, cfg);
      EXPECT_TRUE(out.converged);
      EXPECT_LE(out.iterations, 2) << name << " " << pf.Describe();
      EXPECT_LT(out.last_change, cfg.tolerance);
    }
  }
}

TEST(IterativeTest, OracleAgreementAndMultiStart) {
  std::mt19937_64 rng(52);
  for (const char* name : {"triangle", "simplex"}) {
    for (auto fam : AllFamilies()) {
      const auto net = WithProduction(name, RandomProduction(rng, fam));
      const auto ss = *CheckSemiSymmetry(net).structure;
      const double x_de = SolveDe(ss).total;
      const double x_ue = SolveUe(ss).total;
      SolveOutcome first;
      for (int seed = 0; seed < 10; ++seed) {
        IterationConfig cfg;
        cfg.initial = InitialProfile::Random(seed);
        const auto de = SolveNashIterative(net, cfg);
        ASSERT_TRUE(de.converged) << name << " seed " << seed;
        for (double t : de.totals) EXPECT_NEAR(t, x_de, 1e-6);
        EXPECT_LE(de.deviation_gain, 1e-6 * net.MaxPrize());
        if (seed == 0) {
          first = de;
        } else {
          EXPECT_LE(EffortProfile::MaxAbsDifference(first.profile, de.profile),
                    1e-6);
        }
        const auto ue = SolveNashUeIterative(net, cfg);
        ASSERT_TRUE(ue.converged);
        for (double t : ue.totals) EXPECT_NEAR(t, x_ue, 1e-6);
      }
    }
  }
}

TEST(IterativeTest, SerialAndParallelAgree) {
  const auto net = WithProduction("simplex", ProductionFunction::Ratio(0.7));
  IterationConfig a;
  a.execution = Execution::kSerial;
  a.initial = InitialProfile::Random(3);
  IterationConfig b = a;
  b.execution = Execution::kParallel;
  const auto sa = SolveNashIterative(net, a);
  const auto sb = SolveNashIterative(net, b);
  EXPECT_EQ(sa.profile, sb.profile);
  EXPECT_EQ(sa.iterations, sb.iterations);
}

TEST(IterativeTest, OneBattlePerPlayerRegimesAgree) {
  // Two disjoint duels: the uniform constraint is vacuous.
  const auto pf = ProductionFunction::Ratio(1.0);
  const auto net = ConflictNetwork::Create(
      {1, 2, 3, 4}, {{"a", {1, 2}, 3.0, pf}, {"b", {3, 4}, 7.0, pf}},
      CostFunction::Quadratic());
  const auto de = SolveNashIterative(net);
  const auto ue = SolveNashUeIterative(net);
  ASSERT_TRUE(de.converged && ue.converged);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(de.totals[i], ue.totals[i], 1e-8);
  }
}

TEST(IterativeTest, DuelMatchesSemiSymmetricUe) {
  const auto net = WithProduction("duel", ProductionFunction::Cara(2.0));
  const auto ue = SolveNashUeIterative(net);
  const double x = SolveUe(*CheckSemiSymmetry(net).structure).total;
  for (double t : ue.totals) EXPECT_NEAR(t, x, 1e-8);
}

// Asymmetric prizes within a size class: not semi-symmetric, still solvable.
TEST(IterativeTest, NonSemiSymmetricNetwork) {
  std::vector<Battle> battles = MakeTriangle().battles();
  battles[0].prize = 9.0;
  const auto net =
      ConflictNetwork::Create({1, 2, 3}, battles, CostFunction::Quadratic());
  const auto out = SolveNashIterative(net);
  ASSERT_TRUE(out.converged);
  EXPECT_LE(out.deviation_gain, 1e-6 * net.MaxPrize());
  // Every player is at a best response.
  for (std::size_t i = 0; i < 3; ++i) {
    const auto br = ComputeBestResponse(net, net.players()[i], out.profile);
    const auto own = out.profile.PlayerEfforts(net, i);
    for (std::size_t s = 0; s < own.size(); ++s) {
      EXPECT_NEAR(br.efforts[s], own[s], 1e-8);
    }
  }
}

TEST(IterativeTest, NonConvergenceIsReported) {
  IterationConfig cfg;
  cfg.max_iterations = 1;
  const auto out = SolveNashIterative(
      WithProduction("triangle", ProductionFunction::Ratio(1.0)), cfg);
  EXPECT_FALSE(out.converged);
  EXPECT_EQ(out.iterations, 1);
}

TEST(IterativeTest, ConfigValidation) {
  IterationConfig cfg;
  cfg.damping = 0.0;
  EXPECT_THROW(SolveNashIterative(MakeDuel(), cfg), Error);
  cfg = {};
  cfg.tolerance = -1.0;
  EXPECT_THROW(SolveNashIterative(MakeDuel(), cfg), Error);
}

TEST(BruteForceTest, DuelFindsHalfHalf) {
  const auto net = MakeDuel();
  const BruteForceResult r = BruteForceNash(net);
  ASSERT_FALSE(r.candidates.empty());
  EXPECT_EQ(r.dimensions, 2u);
  EXPECT_EQ(r.profiles_scanned, 101u * 101u);
  const auto& best = r.candidates.front();
  EXPECT_EQ(best.grid_index, (std::vector<int>{50, 50}));
  ASSERT_GT(r.candidates.size(), 1u);
  EXPECT_LT(best.max_gain, r.candidates[1].max_gain);  // unique minimizer
}

TEST(BruteForceTest, SymmetricAcrossBattles) {
  BruteForceConfig cfg;
  cfg.grid = {0.0, 1.0, 11};
  const BruteForceResult r = BruteForceNash(TwoSharedBattles(), cfg);
  ASSERT_FALSE(r.candidates.empty());
  // The interior equilibrium puts 1/sqrt(8) in each battle, between grid
  // points, so the best candidate may split 0.3/0.4; it must stay within a
  // step per battle.
  const auto& idx = r.candidates.front().grid_index;
  ASSERT_EQ(idx.size(), 4u);
  const double x = 1.0 / std::sqrt(8.0);
  for (int i : idx) EXPECT_LE(std::abs(cfg.grid.at(i) - x), cfg.grid.step());
  // The whole candidate set is closed under swapping battles a and b.
  std::set<std::vector<int>> all;
  for (const auto& c : r.candidates) all.insert(c.grid_index);
  for (const auto& c : r.candidates) {
    const auto& g = c.grid_index;
    EXPECT_TRUE(all.count({g[1], g[0], g[3], g[2]}));
  }
}

TEST(BruteForceTest, TriangleUniformGrid) {
  const auto net = WithProduction("triangle", ProductionFunction::Power(2, 0.5));
  BruteForceConfig cfg;
  cfg.grid = {0.0, 2.0, 21};
  cfg.uniform = true;
  const BruteForceResult r = BruteForceNash(net, cfg);
  ASSERT_FALSE(r.candidates.empty());
  EXPECT_EQ(r.dimensions, 3u);
  const double target =
      SolveDe(*CheckSemiSymmetry(net).structure).total / 3.0;
  for (int i : r.candidates.front().grid_index) {
    EXPECT_LE(std::abs(cfg.grid.at(i) - target), cfg.grid.step());
  }
}

TEST(BruteForceTest, MatchesReference) {
  std::mt19937_64 rng(53);
  for (auto fam : AllFamilies()) {
    const auto pf = RandomProduction(rng, fam);
    for (bool uniform : {false, true}) {
      BruteForceConfig cfg;
      cfg.grid = {0.0, 1.5, 6};
      cfg.uniform = uniform;
      const auto net = uniform ? WithProduction("triangle", pf)
                               : ConflictNetwork::Create(
                                     {1, 2, 3},
                                     {{"a", {1, 2}, 2.0, pf},
                                      {"b", {2, 3}, 1.0, pf},
                                      {"c", {1, 3}, 3.0, pf}},
                                     CostFunction::Quadratic());
      cfg.epsilon = 0.3;
      const auto fast = BruteForceNash(net, cfg);
      cfg.execution = Execution::kSerial;
      const auto serial = BruteForceNash(net, cfg);
      const auto ref = BruteForceNashReference(net, cfg);
      ASSERT_EQ(fast.candidates.size(), ref.candidates.size()) << pf.Describe();
      for (std::size_t i = 0; i < ref.candidates.size(); ++i) {
        EXPECT_EQ(fast.candidates[i].grid_index, ref.candidates[i].grid_index);
        EXPECT_NEAR(fast.candidates[i].max_gain, ref.candidates[i].max_gain,
                    1e-9);
        EXPECT_EQ(serial.candidates[i].grid_index,
                  fast.candidates[i].grid_index);
      }
    }
  }
}

TEST(BruteForceTest, Limits) {
  try {
    BruteForceNash(MakeSimplex());  // 4 players x 6 seats
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionTooLarge);
  }
  BruteForceConfig cfg;
  cfg.grid.points = 202;
  EXPECT_THROW(BruteForceNash(MakeDuel(), cfg), Error);
}

}  // namespace
}  // namespace conflictnet
