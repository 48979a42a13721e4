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

#ifndef CONFLICTNET_EXAMPLES_H_
#define CONFLICTNET_EXAMPLES_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conflictnet/network.h"

namespace conflictnet {

// Size-uniform overrides applied to a built-in network.
struct ExampleOverrides {
  std::optional<ProductionFunction> production;         // every battle
  std::map<int, ProductionFunction> production_by_size;  // wins over the above
  std::map<int, double> prize_by_size;
  std::optional<CostFunction> cost;
};

// Three players; battles a:(1,2) b:(2,3) c:(3,1) d:(1,2,3). Defaults:
// v2 = 5, v3 = 72, f = 2 sqrt(x), C = X^2/2.
ConflictNetwork MakeTriangle(const ExampleOverrides& overrides = {});

// Four players; edges a1..a4 forming a 4-cycle, faces b1..b4 (b_i omits
// player i) and the full battle g. Defaults: v2 = 5, v3 = 5, v4 = 72,
// f = 2 sqrt(x), C = X^2/2.
ConflictNetwork MakeSimplex(const ExampleOverrides& overrides = {});

// Two players and a single battle a:(1,2). Defaults: v = 1, f = x,
// C = X^2/2.
ConflictNetwork MakeDuel(const ExampleOverrides& overrides = {});

// "triangle", "simplex" or "duel"; throws kUnknownExample otherwise.
ConflictNetwork GenerateExample(const std::string& name,
                                const ExampleOverrides& overrides = {});

std::vector<std::string> ExampleNames();

}  // namespace conflictnet

#endif  // CONFLICTNET_EXAMPLES_H_
