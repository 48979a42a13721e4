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

#include "conflictnet/equilibrium.h"

#include <cmath>

#include "conflictnet/error.h"

namespace conflictnet {
namespace {

// Expected prize income at a profile where every size-k participant wins
// with probability 1/k.
double SymmetricIncome(const SemiSymmetricStructure& ss) {
  double income = 0.0;
  for (const auto& c : ss.classes) income += c.degree * c.prize / c.size;
  return income;
}

}  // namespace

std::map<int, double> DeResult::EffortBySize() const {
  std::map<int, double> out;
  for (std::size_t k = 0; k < sizes.size(); ++k) out[sizes[k]] = efforts[k];
  return out;
}

DeResult SolveDe(const SemiSymmetricStructure& ss,
                 const BracketingConfig& cfg) {
  ss.Validate();
  const CostFunction& cost = ss.cost;

  auto effort_for = [&](const SizeClass& c, double mu) {
    return InvertH(c.production, c.prize * c.Weight() / cost.Marginal(mu), cfg);
  };
  auto excess = [&](double mu) {
    double supply = 0.0;
    for (const auto& c : ss.classes) supply += c.degree * effort_for(c, mu);
    return mu - supply;
  };
  const double mu = SolveIncreasing(excess, 0.0, cfg);

  DeResult r;
  r.total = 0.0;
  for (const auto& c : ss.classes) {
    const double x = effort_for(c, mu);
    r.sizes.push_back(c.size);
    r.efforts.push_back(x);
    r.total += c.degree * x;
  }
  r.marginal_cost = cost.Marginal(r.total);
  for (std::size_t k = 0; k < ss.classes.size(); ++k) {
    const SizeClass& c = ss.classes[k];
    r.residuals.push_back(c.prize * c.Weight() / c.production.H(r.efforts[k]) -
                          r.marginal_cost);
  }
  r.payoff = SymmetricIncome(ss) - cost.Value(r.total);
  return r;
}

UeResult SolveUe(const SemiSymmetricStructure& ss,
                 const BracketingConfig& cfg) {
  ss.Validate();
  const double degree = ss.TotalDegree();
  auto benefit = [&](double x) {
    double b = 0.0;
    for (const auto& c : ss.classes) {
      b += c.degree * c.prize * c.Weight() / c.production.H(x);
    }
    return b;
  };
  auto excess = [&](double x) {
    return degree * ss.cost.Marginal(degree * x) - benefit(x);
  };

  UeResult r;
  r.effort = SolveIncreasing(excess, 0.0, cfg);
  r.total = degree * r.effort;
  r.marginal_cost = ss.cost.Marginal(r.total) * degree;
  r.residual = benefit(r.effort) - r.marginal_cost;
  r.payoff = SymmetricIncome(ss) - ss.cost.Value(r.total);
  return r;
}

std::vector<double> ReverseValuations(const SemiSymmetricStructure& structure,
                                      std::span<const double> targets) {
  Require(targets.size() == structure.classes.size(),
          "expected one target effort per size class");
  double total = 0.0;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    Require(std::isfinite(targets[k]) && targets[k] > 0.0,
            "target efforts must be positive");
    total += structure.classes[k].degree * targets[k];
  }
  const double marginal = structure.cost.Marginal(total);
  std::vector<double> prizes;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const SizeClass& c = structure.classes[k];
    prizes.push_back(c.production.H(targets[k]) * marginal / c.Weight());
  }
  return prizes;
}

}  // namespace conflictnet
