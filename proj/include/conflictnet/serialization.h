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

#ifndef CONFLICTNET_SERIALIZATION_H_
#define CONFLICTNET_SERIALIZATION_H_

#include <string>

#include "conflictnet/network.h"
#include "json.hpp"

namespace conflictnet {

// Network document:
//   {"players": [1, 2, ...],
//    "cost": {"family": "power", "params": {"kappa": 1, "p": 2}},
//    "battles": [{"id": "a", "participants": [1, 2], "prize": 5,
//                 "production": {"family": "power",
//                                "params": {"A": 2, "r": 0.5}}}, ...]}
// Production families: power {A, r}, ratio {c}, cara {alpha},
// piecewise {s, A, r} with optional {a, b}. Keys are emitted sorted.
//
// Parse failures throw kSchemaError with a JSON-pointer prefix, e.g.
// "/battles/0/participants/1: ...".

nlohmann::json ProductionToJson(const ProductionFunction& pf);
ProductionFunction ProductionFromJson(const nlohmann::json& j,
                                      const std::string& path = "");

nlohmann::json CostToJson(const CostFunction& cost);
CostFunction CostFromJson(const nlohmann::json& j,
                          const std::string& path = "");

nlohmann::json NetworkToJson(const ConflictNetwork& net);
ConflictNetwork NetworkFromJson(const nlohmann::json& j);

// Text helpers; parse errors in the text itself are schema errors too.
std::string DumpNetwork(const ConflictNetwork& net);
ConflictNetwork ParseNetwork(const std::string& text);
ConflictNetwork ReadNetworkFile(const std::string& path);

nlohmann::json StructureToJson(const SemiSymmetricStructure& ss);

}  // namespace conflictnet

#endif  // CONFLICTNET_SERIALIZATION_H_
