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

#ifndef CONFLICTNET_EQUILIBRIUM_H_
#define CONFLICTNET_EQUILIBRIUM_H_

#include <map>
#include <span>
#include <vector>

#include "conflictnet/network.h"
#include "conflictnet/rootfind.h"

namespace conflictnet {

// Discriminatory-effort equilibrium of a semi-symmetric structure. Vectors
// are indexed like structure.classes.
struct DeResult {
  std::vector<int> sizes;
  std::vector<double> efforts;  // x*_k per size class
  double marginal_cost = 0.0;   // lambda* = C'(total)
  double total = 0.0;           // mu* = X* = sum_k d_k x*_k
  double payoff = 0.0;
  // v_k (k-1)/k^2 f'(x*_k)/f(x*_k) - lambda*, per class.
  std::vector<double> residuals;

  std::map<int, double> EffortBySize() const;
};

// Uniform-effort equilibrium.
struct UeResult {
  double effort = 0.0;         // x^u
  double marginal_cost = 0.0;  // lambda^u = C'(D x^u) * D
  double total = 0.0;          // X^u = D x^u
  double payoff = 0.0;
  // sum_k d_k v_k (k-1)/k^2 f_k'(x^u)/f_k(x^u) - lambda^u.
  double residual = 0.0;
};

// Solves mu = sum_k d_k g_k(mu) with g_k(mu) = h_k^{-1}(v_k (k-1) / (k^2
// C'(mu))). The left side minus the right is strictly increasing, so
// bracketed bisection finds the single crossing.
DeResult SolveDe(const SemiSymmetricStructure& ss,
                 const BracketingConfig& cfg = {});

// Solves sum_k d_k v_k (k-1)/k^2 / h_k(x) = D C'(D x) for the common effort
// x; with size-dependent f_k this is the aggregate first-order condition.
UeResult SolveUe(const SemiSymmetricStructure& ss,
                 const BracketingConfig& cfg = {});

// Prizes that make `targets` (one effort per size class) the DE equilibrium:
// v_k = k^2/(k-1) * h_k(x_k) * C'(sum_l d_l x_l). Prizes in `structure` are
// ignored.
std::vector<double> ReverseValuations(const SemiSymmetricStructure& structure,
                                      std::span<const double> targets);

}  // namespace conflictnet

#endif  // CONFLICTNET_EQUILIBRIUM_H_
