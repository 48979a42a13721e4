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

#ifndef CONFLICTNET_GENERAL_SOLVER_H_
#define CONFLICTNET_GENERAL_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conflictnet/network.h"
#include "conflictnet/parallel.h"
#include "conflictnet/rootfind.h"

namespace conflictnet {

// Effort placed in a battle whose rivals all exert zero: any positive effort
// wins it outright, so the marginal benefit at 0+ is unbounded.
inline constexpr double kFloorEffort = 1e-12;

struct InitialProfile {
  enum class Kind { kConstant, kRandom, kExplicit };

  Kind kind = Kind::kConstant;
  double value = 1.0;
  std::uint64_t seed = 0;
  double lo = 0.01;
  double hi = 5.0;
  EffortProfile profile;

  static InitialProfile Constant(double value);
  static InitialProfile Random(std::uint64_t seed, double lo = 0.01,
                               double hi = 5.0);
  static InitialProfile Explicit(EffortProfile profile);

  // With `uniform`, each player gets one draw applied to all her seats.
  EffortProfile Materialize(const ConflictNetwork& net, bool uniform) const;
};

struct IterationConfig {
  int max_iterations = 10000;
  double tolerance = 1e-10;  // max-norm profile change
  double damping = 1.0;      // weight on the new best response, in (0, 1]
  InitialProfile initial;
  // Damping halves after this many consecutive non-decreasing changes.
  int oscillation_window = 10;
  Execution execution = Execution::kParallel;
  // Best responses are nested root solves; they run tighter than the
  // library default so a fixed point reproduces itself to ~1e-14.
  BracketingConfig inner{1.0, 2.0, 200, 1e-15, 1e-14, 200};

  void Validate() const;
};

struct SolveOutcome {
  EffortProfile profile;
  bool converged = false;
  int iterations = 0;
  double last_change = 0.0;
  double damping = 1.0;  // final damping weight
  // Largest payoff gain any player gets by deviating to her best response.
  double deviation_gain = 0.0;
  std::vector<double> totals;  // per-player total effort
  // Battles where some player faced all-zero rivals at the final profile.
  std::vector<std::string> degenerate_battles;
};

struct BestResponse {
  std::vector<double> efforts;  // in SeatsOf order
  std::vector<std::size_t> degenerate_battles;
  bool corner = false;  // some non-degenerate seat is at zero
};

// The maximizer of a player's payoff against the rival efforts in `profile`
// (the player's own entries are ignored). For a candidate total X each
// battle's effort solves v f'(x) S / (f(x) + S)^2 = C'(X), where S is the
// rivals' summed production (or is zero when the marginal benefit at 0+
// already falls short); the total is then closed by bisection on X.
// Battles with S = 0 get kFloorEffort, or throw kDegenerateBattle when
// `strict`.
BestResponse ComputeBestResponse(const ConflictNetwork& net, PlayerId player,
                                 const EffortProfile& profile,
                                 const BracketingConfig& cfg = {},
                                 bool strict = false);

// Best common effort for a player restricted to one level in all battles.
double ComputeUniformBestResponse(const ConflictNetwork& net, PlayerId player,
                                  const EffortProfile& profile,
                                  const BracketingConfig& cfg = {});

// Payoff when the player applies `effort` to every one of her battles.
double UniformPayoff(const ConflictNetwork& net, const EffortProfile& profile,
                     std::size_t player_index, double effort);

// Simultaneous damped best-response iteration under discriminatory effort.
// Non-convergence is reported through `converged`, never thrown.
SolveOutcome SolveNashIterative(const ConflictNetwork& net,
                                const IterationConfig& cfg = {});

// Same scheme with each player's strategy restricted to a single level.
SolveOutcome SolveNashUeIterative(const ConflictNetwork& net,
                                  const IterationConfig& cfg = {});

// Best responses of all players against one frozen profile.
std::vector<std::vector<double>> AllBestResponses(const ConflictNetwork& net,
                                                  const EffortProfile& profile,
                                                  const BracketingConfig& cfg,
                                                  Execution exec);
std::vector<double> AllUniformBestResponses(const ConflictNetwork& net,
                                            const EffortProfile& profile,
                                            const BracketingConfig& cfg,
                                            Execution exec);

// ---------------------------------------------------------------------------
// Brute-force grid oracle.

struct EffortGrid {
  double lo = 0.0;
  double hi = 1.0;
  int points = 101;

  double step() const { return points > 1 ? (hi - lo) / (points - 1) : 0.0; }
  double at(int i) const { return i + 1 == points ? hi : lo + step() * i; }
};

struct BruteForceConfig {
  EffortGrid grid;
  // Certification slack; <= 0 means 2 * step * max prize.
  double epsilon = 0.0;
  // One effort level per player instead of one per seat.
  bool uniform = false;
  Execution execution = Execution::kParallel;
};

inline constexpr std::size_t kMaxBruteForceDimensions = 6;
inline constexpr int kMaxGridPoints = 201;

struct NashCandidate {
  std::vector<int> grid_index;  // one per dimension
  EffortProfile profile;
  double max_gain = 0.0;  // best grid deviation gain over all players
};

struct BruteForceResult {
  std::vector<NashCandidate> candidates;  // ascending max_gain, then index
  double epsilon = 0.0;
  std::size_t dimensions = 0;
  std::size_t profiles_scanned = 0;
};

// Scans every grid profile and keeps the epsilon-equilibria. Throws
// kDimensionTooLarge past 6 dimensions and kPreconditionViolation for grids
// over 201 points.
BruteForceResult BruteForceNash(const ConflictNetwork& net,
                                const BruteForceConfig& cfg = {});

// Slow serial version built on the model's Payoff(); kept as the oracle for
// the optimized scan.
BruteForceResult BruteForceNashReference(const ConflictNetwork& net,
                                         const BruteForceConfig& cfg = {});

}  // namespace conflictnet

#endif  // CONFLICTNET_GENERAL_SOLVER_H_
