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


#ifndef CONFLICTNET_TOOLS_CLI_H_
#define CONFLICTNET_TOOLS_CLI_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "conflictnet/error.h"
#include "conflictnet/network.h"

namespace conflictnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNonConvergence = 2;

// Where a network comes from plus size-uniform overrides. Shared by the
// subcommands and by sweep specs.
struct NetworkSource {
  std::optional<std::string> example;
  std::optional<std::string> input;  // network JSON path
  std::optional<ProductionFunction> production;
  std::vector<double> prizes;       // one per battle size, ascending
  std::map<int, double> tullock;    // size -> r, meaning f_k = x^r
  std::optional<CostFunction> cost;
};

ConflictNetwork BuildNetwork(const NetworkSource& source);

// "r2=1,r3=0.5" -> {2: 1, 3: 0.5}.
std::map<int, double> ParseTullock(const std::string& text);
// "power:kappa,p".
CostFunction ParseCost(const std::string& text);
std::vector<double> ParseNumberList(const std::string& text);

// Valuation grid flag: "random:N[:seed=S][:lo=L][:hi=H]" or
// "explicit:5,72[;6,80...]".
std::vector<std::vector<double>> ParseGrid(const std::string& text,
                                           std::size_t classes,
                                           std::uint64_t default_seed);

// Numerical failures map to 2, everything else to 1.
int ExitCodeFor(ErrorCode code);

// Entry point; args exclude the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace conflictnet::cli

#endif  // CONFLICTNET_TOOLS_CLI_H_
