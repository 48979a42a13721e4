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


#ifndef CONFLICTNET_TOOLS_SWEEP_H_
#define CONFLICTNET_TOOLS_SWEEP_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli.h"
#include "conflictnet/network.h"
#include "json.hpp"

namespace conflictnet::cli {

inline constexpr std::size_t kDefaultMaxGrid = 1000000;

// Axis names: v<k> (prize of size k), r<k> (power exponent of size k),
// r (every size), cost_p, cost_kappa.
struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

// {"base": {"example": "triangle", "f": "power:1,0.5", "v": [5, 72],
//           "tullock": {"r2": 1}, "cost": "power:1,2"} | {"input": path},
//  "axes": [{"name": "v3", "from": 10, "to": 100, "steps": 10},
//           {"name": "r", "values": [0.5, 1]}],
//  "output": "out.csv", "threads": 4}
struct SweepSpec {
  NetworkSource base;
  std::vector<SweepAxis> axes;
  std::optional<std::string> output;
  int threads = 0;  // 0 keeps the OpenMP default
};

SweepSpec ParseSweepSpec(const nlohmann::json& j);
SweepSpec ReadSweepSpec(const std::string& path);

// CONFLICTNET_MAX_GRID or kDefaultMaxGrid.
std::size_t MaxGridPoints();

std::size_t GridSize(const SweepSpec& spec);

// Semi-symmetric structure for one grid point (row index in lexicographic
// order, last axis fastest).
SemiSymmetricStructure SweepPoint(const SemiSymmetricStructure& base,
                                  const SweepSpec& spec, std::size_t row);

struct SweepSummary {
  std::size_t rows = 0;     // total grid points
  std::size_t skipped = 0;  // already present in the output file
  std::size_t written = 0;
};

// Writes the CSV to spec.output (resuming a partial file) or to `out` when
// no output path is set. Rows are flushed in chunks, so an interrupted run
// keeps every completed chunk.
SweepSummary RunSweep(const SweepSpec& spec, std::ostream& out);

}  // namespace conflictnet::cli

#endif  // CONFLICTNET_TOOLS_SWEEP_H_
