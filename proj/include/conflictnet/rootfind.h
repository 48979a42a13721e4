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

#ifndef CONFLICTNET_ROOTFIND_H_
#define CONFLICTNET_ROOTFIND_H_

#include <functional>

#include "conflictnet/production.h"

namespace conflictnet {

struct BracketingConfig {
  double initial_guess = 1.0;
  double expansion_factor = 2.0;
  int max_expansions = 200;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_bisections = 200;

  // Throws kPreconditionViolation on out-of-range fields.
  void Validate() const;
};

// Root of an increasing g on (0, inf): finds x with g(x) = target.
//
// The bracket grows geometrically from the initial guess (upward while
// g < target, downward while g > target), then bisection runs until the
// bracket width is within both abs_tol and rel_tol * lo, or until it can no
// longer shrink in floating point. Throws kBracketFailure when expansion
// runs out before straddling the target and kNonFiniteEvaluation if g
// returns NaN. g may return +/-inf; those compare as ordinary values.
double SolveIncreasing(const std::function<double(double)>& g, double target,
                       const BracketingConfig& cfg = {});

// x > 0 with h(x) = y for h = f / f'. Requires y > 0.
double InvertH(const ProductionFunction& pf, double y,
               const BracketingConfig& cfg = {});

}  // namespace conflictnet

#endif  // CONFLICTNET_ROOTFIND_H_
