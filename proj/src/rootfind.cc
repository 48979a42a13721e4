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

#include "conflictnet/rootfind.h"

#include <cmath>

#include "conflictnet/error.h"
#include "conflictnet/format.h"

namespace conflictnet {

void BracketingConfig::Validate() const {
  Require(std::isfinite(initial_guess) && initial_guess > 0.0,
          "initial guess must be positive");
  Require(expansion_factor > 1.0, "expansion factor must exceed 1");
  Require(abs_tol > 0.0 && rel_tol > 0.0, "tolerances must be positive");
  Require(max_expansions >= 1 && max_bisections >= 1,
          "iteration limits must be positive");
}

double SolveIncreasing(const std::function<double(double)>& g, double target,
                       const BracketingConfig& cfg) {
  cfg.Validate();
  auto eval = [&](double x) {
    const double v = g(x);
    if (std::isnan(v)) {
      Fail(ErrorCode::kNonFiniteEvaluation,
           "g(" + FormatShortest(x) + ") is NaN");
    }
    return v;
  };

  double lo = cfg.initial_guess;
  double hi = cfg.initial_guess;
  double g0 = eval(lo);
  if (g0 == target) return lo;
  if (g0 < target) {
    int n = 0;
    for (;;) {
      lo = hi;
      hi *= cfg.expansion_factor;
      if (eval(hi) >= target) break;
      if (++n >= cfg.max_expansions || !std::isfinite(hi)) {
        Fail(ErrorCode::kBracketFailure,
             "no upper bracket for target " + FormatShortest(target));
      }
    }
  } else {
    int n = 0;
    for (;;) {
      hi = lo;
      lo /= cfg.expansion_factor;
      if (eval(lo) <= target) break;
      if (++n >= cfg.max_expansions || lo == 0.0) {
        Fail(ErrorCode::kBracketFailure,
             "no lower bracket for target " + FormatShortest(target));
      }
    }
  }

  // Invariant: g(lo) <= target <= g(hi).
  for (int i = 0; i < cfg.max_bisections; ++i) {
    const double width = hi - lo;
    if (width <= cfg.abs_tol && width <= cfg.rel_tol * lo) break;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    const double gm = eval(mid);
    if (gm == target) return mid;
    if (gm < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

double InvertH(const ProductionFunction& pf, double y,
               const BracketingConfig& cfg) {
  Require(std::isfinite(y) && y > 0.0, "h can only be inverted at y > 0");
  return SolveIncreasing([&pf](double x) { return pf.H(x); }, y, cfg);
}

}  // namespace conflictnet
