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

#ifndef CONFLICTNET_ANALYSIS_H_
#define CONFLICTNET_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conflictnet/equilibrium.h"
#include "conflictnet/parallel.h"

namespace conflictnet {

enum class Curvature { kConvex, kConcave, kLinear, kIndeterminate };
std::string CurvatureName(Curvature c);

struct CurvatureVerdict {
  Curvature curvature = Curvature::kIndeterminate;
  // Signed midpoint defects h((a+b)/2) - (h(a)+h(b))/2, relative to the
  // chord height; convex h keeps them <= 0.
  double max_defect = 0.0;
  double min_defect = 0.0;
  // Sign pattern of 2 f f''^2 - f'^2 f'' - f f' f''' (the sign of h'').
  int third_positive = 0;
  int third_negative = 0;
  int third_zero = 0;
  Curvature family = Curvature::kIndeterminate;   // analytic, per family
  Curvature sampled = Curvature::kIndeterminate;  // from defects alone
};

struct CurvatureOptions {
  double lo = 1e-3;
  double hi = 1e3;
  int samples = 64;
  double tolerance = 1e-9;
};

// Natural sampling window for the family (includes any kink).
CurvatureOptions DefaultCurvatureOptions(const ProductionFunction& pf);

// Curvature of h = f/f'. The family decides analytically; midpoint defects
// and the third-derivative sign pattern must agree with it, otherwise the
// verdict is Indeterminate. Requires samples >= 64.
CurvatureVerdict ClassifyH(const ProductionFunction& pf,
                           const CurvatureOptions& options);
CurvatureVerdict ClassifyH(const ProductionFunction& pf);

inline constexpr double kNeutralityTolerance = 1e-6;

enum class Ordering { kLess, kEqual, kGreater };  // X_de relative to X_ue
std::string OrderingSymbol(Ordering o);            // "<", "=", ">"

enum class Recommendation { kPreferUe, kPreferDe, kIndifferent, kNone };
std::string RecommendationName(Recommendation r);

struct ComparisonReport {
  SemiSymmetricStructure structure;
  // Verdict for the shared f; absent for size-dependent production.
  std::optional<CurvatureVerdict> verdict;
  // Curvature the prediction is based on (Indeterminate = no prediction).
  Curvature curvature = Curvature::kIndeterminate;
  DeResult de;
  UeResult ue;
  double x_de = 0.0;
  double x_ue = 0.0;
  double payoff_de = 0.0;
  double payoff_ue = 0.0;
  double gap = 0.0;  // |X_de - X_ue| / X_ue
  Ordering ordering = Ordering::kEqual;
  // Whether totals and payoffs respect the predicted ordering; empty when
  // there is no prediction.
  std::optional<bool> consistent;
  Recommendation recommendation = Recommendation::kNone;
};

// Solves both regimes and checks the ordering predicted by the curvature of
// h: convex means X_de <= X_ue and payoff_de >= payoff_ue, concave the
// reverse, linear equality within kNeutralityTolerance. Size-dependent
// production only gets a prediction when every f_k is a power function.
ComparisonReport CompareRegimes(const SemiSymmetricStructure& ss,
                                const BracketingConfig& cfg = {});

// Both equilibria for one structure.
struct RegimePoint {
  double x_de = 0.0;
  double x_ue = 0.0;
  double payoff_de = 0.0;
  double payoff_ue = 0.0;
  double gap = 0.0;
};

// Independent structures solved side by side; output order matches input
// order under either execution mode.
std::vector<RegimePoint> EvaluateRegimes(
    std::span<const SemiSymmetricStructure> structures,
    const BracketingConfig& cfg = {}, Execution exec = Execution::kParallel);

struct NeutralityReport {
  bool neutral = true;
  double max_gap = 0.0;
  std::size_t worst_index = 0;
  std::vector<double> worst_prizes;
  std::vector<double> gaps;
  std::vector<RegimePoint> points;
};

// For every prize vector in `grid` (ascending-size order) solves both regimes
// and records the relative total-effort gap; neutral iff every gap is within
// kNeutralityTolerance. Throws kPreconditionViolation on an empty grid.
NeutralityReport NeutralityCheck(const SemiSymmetricStructure& structure,
                                 const std::vector<std::vector<double>>& grid,
                                 const BracketingConfig& cfg = {},
                                 Execution exec = Execution::kParallel);

// `count` prize vectors with entries uniform in [lo, hi].
std::vector<std::vector<double>> RandomValuationGrid(std::size_t classes,
                                                     std::size_t count,
                                                     std::uint64_t seed,
                                                     double lo = 0.1,
                                                     double hi = 100.0);

// sqrt(sum_k d_k v_k (k-1)/k^2 r_k) for power production and C = X^2/2.
// Throws kPreconditionViolation for any other cost or family.
double TullockClosedFormTotal(const SemiSymmetricStructure& ss);

}  // namespace conflictnet

#endif  // CONFLICTNET_ANALYSIS_H_
