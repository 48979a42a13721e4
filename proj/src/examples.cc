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

#include "conflictnet/examples.h"

#include "conflictnet/error.h"

namespace conflictnet {
namespace {

struct BattleShape {
  std::string id;
  std::vector<PlayerId> participants;
};

ConflictNetwork Build(std::vector<PlayerId> players,
                      const std::vector<BattleShape>& shapes,
                      std::map<int, double> default_prizes,
                      const ExampleOverrides& overrides) {
  for (const auto& [size, prize] : overrides.prize_by_size) {
    if (!default_prizes.count(size)) {
      Fail(ErrorCode::kPreconditionViolation,
           "example has no battles of size " + std::to_string(size));
    }
    default_prizes[size] = prize;
  }
  const ProductionFunction base =
      overrides.production.value_or(ProductionFunction::Power(2.0, 0.5));
  std::vector<Battle> battles;
  for (const auto& shape : shapes) {
    const int size = static_cast<int>(shape.participants.size());
    auto it = overrides.production_by_size.find(size);
    battles.push_back({shape.id, shape.participants, default_prizes.at(size),
                       it != overrides.production_by_size.end() ? it->second
                                                                : base});
  }
  return ConflictNetwork::Create(
      std::move(players), std::move(battles),
      overrides.cost.value_or(CostFunction::Quadratic()));
}

}  // namespace

ConflictNetwork MakeTriangle(const ExampleOverrides& overrides) {
  return Build({1, 2, 3},
               {{"a", {1, 2}}, {"b", {2, 3}}, {"c", {3, 1}}, {"d", {1, 2, 3}}},
               {{2, 5.0}, {3, 72.0}}, overrides);
}

ConflictNetwork MakeSimplex(const ExampleOverrides& overrides) {
  return Build({1, 2, 3, 4},
               {{"a1", {1, 2}},
                {"a2", {2, 3}},
                {"a3", {3, 4}},
                {"a4", {4, 1}},
                {"b1", {2, 3, 4}},
                {"b2", {1, 3, 4}},
                {"b3", {1, 2, 4}},
                {"b4", {1, 2, 3}},
                {"g", {1, 2, 3, 4}}},
               {{2, 5.0}, {3, 5.0}, {4, 72.0}}, overrides);
}

ConflictNetwork MakeDuel(const ExampleOverrides& overrides) {
  ExampleOverrides o = overrides;
  if (!o.production) o.production = ProductionFunction::Power(1.0, 1.0);
  return Build({1, 2}, {{"a", {1, 2}}}, {{2, 1.0}}, o);
}

ConflictNetwork GenerateExample(const std::string& name,
                                const ExampleOverrides& overrides) {
  if (name == "triangle") return MakeTriangle(overrides);
  if (name == "simplex") return MakeSimplex(overrides);
  if (name == "duel") return MakeDuel(overrides);
  Fail(ErrorCode::kUnknownExample, "no built-in example named '" + name + "'");
}

std::vector<std::string> ExampleNames() {
  return {"duel", "simplex", "triangle"};
}

}  // namespace conflictnet
