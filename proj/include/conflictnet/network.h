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

#ifndef CONFLICTNET_NETWORK_H_
#define CONFLICTNET_NETWORK_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "conflictnet/cost.h"
#include "conflictnet/production.h"

namespace conflictnet {

using PlayerId = int;

struct Battle {
  std::string id;
  std::vector<PlayerId> participants;
  double prize = 1.0;
  ProductionFunction production = ProductionFunction::Power(1.0, 1.0);

  int size() const { return static_cast<int>(participants.size()); }
};

// A player's seat in a battle: the battle index and the player's position in
// that battle's participant list.
struct Seat {
  std::size_t battle = 0;
  std::size_t slot = 0;
};

// Players, battles and a shared cost function. Immutable once created;
// Create() enforces: >= 2 distinct participants per battle, positive prizes,
// unique battle ids, known participant ids, and every player in >= 1 battle.
class ConflictNetwork {
 public:
  static ConflictNetwork Create(std::vector<PlayerId> players,
                                std::vector<Battle> battles, CostFunction cost);

  std::size_t num_players() const { return players_.size(); }
  std::size_t num_battles() const { return battles_.size(); }
  const std::vector<PlayerId>& players() const { return players_; }
  const std::vector<Battle>& battles() const { return battles_; }
  const Battle& battle(std::size_t t) const { return battles_[t]; }
  const CostFunction& cost() const { return cost_; }

  // Throws kUnknownPlayer.
  std::size_t PlayerIndex(PlayerId id) const;
  bool HasPlayer(PlayerId id) const { return index_.count(id) > 0; }

  // Seats of the player at `player_index`, in battle order.
  std::span<const Seat> SeatsOf(std::size_t player_index) const {
    return seats_[player_index];
  }
  // Seat index -> player index, per battle.
  std::span<const std::size_t> ParticipantIndices(std::size_t t) const {
    return participant_index_[t];
  }

  // The N x T 0/1 incidence matrix.
  std::vector<std::vector<int>> Incidence() const;

  // Sum of per-player effort dimensions (sum of t_i).
  std::size_t TotalSeats() const;

  double MaxPrize() const;

 private:
  ConflictNetwork(std::vector<PlayerId> players, std::vector<Battle> battles,
                  CostFunction cost)
      : players_(std::move(players)),
        battles_(std::move(battles)),
        cost_(cost) {}

  std::vector<PlayerId> players_;
  std::vector<Battle> battles_;
  CostFunction cost_;
  std::unordered_map<PlayerId, std::size_t> index_;
  std::vector<std::vector<Seat>> seats_;
  std::vector<std::vector<std::size_t>> participant_index_;
};

// Nonnegative efforts indexed by (battle, seat). Entries exist exactly for
// the incidence pattern of the network it was built for.
class EffortProfile {
 public:
  EffortProfile() = default;
  static EffortProfile Constant(const ConflictNetwork& net, double effort);
  static EffortProfile Zero(const ConflictNetwork& net) {
    return Constant(net, 0.0);
  }

  double at(std::size_t battle, std::size_t slot) const {
    return efforts_[battle][slot];
  }
  void set(std::size_t battle, std::size_t slot, double effort);

  std::span<const double> battle_efforts(std::size_t battle) const {
    return efforts_[battle];
  }

  // Lookup by ids; throws kUnknownPlayer if the player does not sit in the
  // battle.
  double Get(const ConflictNetwork& net, PlayerId player,
             const std::string& battle_id) const;

  double Total(const ConflictNetwork& net, std::size_t player_index) const;
  std::vector<double> Totals(const ConflictNetwork& net) const;

  // Player's efforts in SeatsOf order.
  std::vector<double> PlayerEfforts(const ConflictNetwork& net,
                                    std::size_t player_index) const;
  void SetPlayerEfforts(const ConflictNetwork& net, std::size_t player_index,
                        std::span<const double> efforts);

  bool ShapeMatches(const ConflictNetwork& net) const;

  // max |a - b| over all entries; shapes must match.
  static double MaxAbsDifference(const EffortProfile& a,
                                 const EffortProfile& b);

  bool operator==(const EffortProfile&) const = default;

 private:
  std::vector<std::vector<double>> efforts_;
};

// Logit contest success: f(x_i) / sum_j f(x_j), or 1/n when all efforts are
// zero.
std::vector<double> WinningProbabilities(const Battle& battle,
                                         std::span<const double> efforts);

// sum over the player's battles of prize * win probability, minus C(X_i).
double Payoff(const ConflictNetwork& net, const EffortProfile& profile,
              PlayerId player);
double PayoffByIndex(const ConflictNetwork& net, const EffortProfile& profile,
                     std::size_t player_index);

// One size class of a semi-symmetric network: each player sits in `degree`
// battles of this size, all with the same prize and production function.
struct SizeClass {
  int size = 2;
  int degree = 1;
  double prize = 1.0;
  ProductionFunction production = ProductionFunction::Power(1.0, 1.0);

  // (k - 1) / k^2, the marginal win-probability weight at a symmetric profile.
  double Weight() const {
    return static_cast<double>(size - 1) / (static_cast<double>(size) * size);
  }
};

struct SemiSymmetricStructure {
  std::vector<SizeClass> classes;  // ascending size
  CostFunction cost = CostFunction::Quadratic();

  int TotalDegree() const;
  const SizeClass* Find(int size) const;
  // True when every class shares one production function.
  bool SharedProduction() const;
  // Same sizes/degrees/production, new prizes (ascending-size order).
  SemiSymmetricStructure WithPrizes(std::span<const double> prizes) const;
  std::vector<double> Prizes() const;
  // Checks degree >= 1, size >= 2, prize > 0, ascending distinct sizes.
  void Validate() const;
};

struct SemiSymmetryViolation {
  enum class Kind { kDegree, kPrize, kProduction };
  Kind kind;
  int size = 0;
  std::optional<PlayerId> player;
  std::string message;
};

struct SemiSymmetryCheck {
  std::optional<SemiSymmetricStructure> structure;
  std::vector<SemiSymmetryViolation> violations;

  bool ok() const { return structure.has_value(); }
};

// Violations are data: every breach is listed rather than thrown.
SemiSymmetryCheck CheckSemiSymmetry(const ConflictNetwork& net);

// Profile in which every seat of a size-k battle carries effort_by_size[k].
EffortProfile SizeDeterminedProfile(const ConflictNetwork& net,
                                    const std::map<int, double>& effort_by_size);

}  // namespace conflictnet

#endif  // CONFLICTNET_NETWORK_H_
