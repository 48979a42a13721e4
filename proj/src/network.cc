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

#include "conflictnet/network.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

#include "conflictnet/error.h"
#include "conflictnet/format.h"

namespace conflictnet {

ConflictNetwork ConflictNetwork::Create(std::vector<PlayerId> players,
                                        std::vector<Battle> battles,
                                        CostFunction cost) {
  Require(players.size() >= 2, "a network needs at least two players");
  Require(!battles.empty(), "a network needs at least one battle");
  ConflictNetwork net(std::move(players), std::move(battles), cost);
  for (std::size_t i = 0; i < net.players_.size(); ++i) {
    Require(net.index_.emplace(net.players_[i], i).second,
            "duplicate player id " + std::to_string(net.players_[i]));
  }
  net.seats_.resize(net.players_.size());
  net.participant_index_.resize(net.battles_.size());
  std::unordered_set<std::string> battle_ids;
  for (std::size_t t = 0; t < net.battles_.size(); ++t) {
    const Battle& b = net.battles_[t];
    Require(battle_ids.insert(b.id).second, "duplicate battle id '" + b.id + "'");
    Require(b.participants.size() >= 2,
            "battle '" + b.id + "' needs at least two participants");
    Require(std::isfinite(b.prize) && b.prize > 0.0,
            "battle '" + b.id + "' prize must be positive");
    std::set<PlayerId> seen;
    for (std::size_t s = 0; s < b.participants.size(); ++s) {
      const PlayerId p = b.participants[s];
      Require(seen.insert(p).second, "battle '" + b.id +
                                         "' lists player " + std::to_string(p) +
                                         " twice");
      auto it = net.index_.find(p);
      if (it == net.index_.end()) {
        Fail(ErrorCode::kUnknownPlayer, "battle '" + b.id +
                                            "' references unknown player " +
                                            std::to_string(p));
      }
      net.seats_[it->second].push_back({t, s});
      net.participant_index_[t].push_back(it->second);
    }
  }
  for (std::size_t i = 0; i < net.players_.size(); ++i) {
    Require(!net.seats_[i].empty(), "player " + std::to_string(net.players_[i]) +
                                        " takes part in no battle");
  }
  return net;
}

std::size_t ConflictNetwork::PlayerIndex(PlayerId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    Fail(ErrorCode::kUnknownPlayer, "no player " + std::to_string(id));
  }
  return it->second;
}

std::vector<std::vector<int>> ConflictNetwork::Incidence() const {
  std::vector<std::vector<int>> gamma(players_.size(),
                                      std::vector<int>(battles_.size(), 0));
  for (std::size_t i = 0; i < seats_.size(); ++i) {
    for (const Seat& seat : seats_[i]) gamma[i][seat.battle] = 1;
  }
  return gamma;
}

std::size_t ConflictNetwork::TotalSeats() const {
  std::size_t n = 0;
  for (const auto& s : seats_) n += s.size();
  return n;
}

double ConflictNetwork::MaxPrize() const {
  double m = 0.0;
  for (const auto& b : battles_) m = std::max(m, b.prize);
  return m;
}

EffortProfile EffortProfile::Constant(const ConflictNetwork& net,
                                      double effort) {
  Require(effort >= 0.0 && std::isfinite(effort),
          "efforts must be finite and nonnegative");
  EffortProfile profile;
  profile.efforts_.reserve(net.num_battles());
  for (const auto& b : net.battles()) {
    profile.efforts_.emplace_back(b.participants.size(), effort);
  }
  return profile;
}

void EffortProfile::set(std::size_t battle, std::size_t slot, double effort) {
  Require(effort >= 0.0 && std::isfinite(effort),
          "efforts must be finite and nonnegative");
  efforts_[battle][slot] = effort;
}

double EffortProfile::Get(const ConflictNetwork& net, PlayerId player,
                          const std::string& battle_id) const {
  const std::size_t pi = net.PlayerIndex(player);
  for (const Seat& seat : net.SeatsOf(pi)) {
    if (net.battle(seat.battle).id == battle_id) {
      return efforts_[seat.battle][seat.slot];
    }
  }
  Fail(ErrorCode::kUnknownPlayer, "player " + std::to_string(player) +
                                      " does not take part in battle '" +
                                      battle_id + "'");
}

double EffortProfile::Total(const ConflictNetwork& net,
                            std::size_t player_index) const {
  double total = 0.0;
  for (const Seat& seat : net.SeatsOf(player_index)) {
    total += efforts_[seat.battle][seat.slot];
  }
  return total;
}

std::vector<double> EffortProfile::Totals(const ConflictNetwork& net) const {
  std::vector<double> totals(net.num_players());
  for (std::size_t i = 0; i < totals.size(); ++i) totals[i] = Total(net, i);
  return totals;
}

std::vector<double> EffortProfile::PlayerEfforts(
    const ConflictNetwork& net, std::size_t player_index) const {
  std::vector<double> out;
  for (const Seat& seat : net.SeatsOf(player_index)) {
    out.push_back(efforts_[seat.battle][seat.slot]);
  }
  return out;
}

void EffortProfile::SetPlayerEfforts(const ConflictNetwork& net,
                                     std::size_t player_index,
                                     std::span<const double> efforts) {
  const auto seats = net.SeatsOf(player_index);
  Require(efforts.size() == seats.size(), "effort vector length mismatch");
  for (std::size_t k = 0; k < seats.size(); ++k) {
    set(seats[k].battle, seats[k].slot, efforts[k]);
  }
}

bool EffortProfile::ShapeMatches(const ConflictNetwork& net) const {
  if (efforts_.size() != net.num_battles()) return false;
  for (std::size_t t = 0; t < efforts_.size(); ++t) {
    if (efforts_[t].size() != net.battle(t).participants.size()) return false;
  }
  return true;
}

double EffortProfile::MaxAbsDifference(const EffortProfile& a,
                                       const EffortProfile& b) {
  Require(a.efforts_.size() == b.efforts_.size(), "profile shape mismatch");
  double m = 0.0;
  for (std::size_t t = 0; t < a.efforts_.size(); ++t) {
    Require(a.efforts_[t].size() == b.efforts_[t].size(),
            "profile shape mismatch");
    for (std::size_t s = 0; s < a.efforts_[t].size(); ++s) {
      m = std::max(m, std::abs(a.efforts_[t][s] - b.efforts_[t][s]));
    }
  }
  return m;
}

std::vector<double> WinningProbabilities(const Battle& battle,
                                         std::span<const double> efforts) {
  Require(efforts.size() == battle.participants.size(),
          "effort vector length must equal participant count");
  std::vector<double> probs(efforts.size());
  double total = 0.0;
  for (std::size_t i = 0; i < efforts.size(); ++i) {
    Require(efforts[i] >= 0.0, "efforts must be nonnegative");
    probs[i] = battle.production.Value(efforts[i]);
    total += probs[i];
  }
  if (total == 0.0) {
    std::fill(probs.begin(), probs.end(), 1.0 / efforts.size());
    return probs;
  }
  for (double& p : probs) p /= total;
  return probs;
}

double PayoffByIndex(const ConflictNetwork& net, const EffortProfile& profile,
                     std::size_t player_index) {
  double benefit = 0.0;
  double total = 0.0;
  for (const Seat& seat : net.SeatsOf(player_index)) {
    const Battle& b = net.battle(seat.battle);
    const auto probs =
        WinningProbabilities(b, profile.battle_efforts(seat.battle));
    benefit += b.prize * probs[seat.slot];
    total += profile.at(seat.battle, seat.slot);
  }
  return benefit - net.cost().Value(total);
}

double Payoff(const ConflictNetwork& net, const EffortProfile& profile,
              PlayerId player) {
  return PayoffByIndex(net, profile, net.PlayerIndex(player));
}

int SemiSymmetricStructure::TotalDegree() const {
  int d = 0;
  for (const auto& c : classes) d += c.degree;
  return d;
}

const SizeClass* SemiSymmetricStructure::Find(int size) const {
  for (const auto& c : classes) {
    if (c.size == size) return &c;
  }
  return nullptr;
}

bool SemiSymmetricStructure::SharedProduction() const {
  for (const auto& c : classes) {
    if (!(c.production == classes.front().production)) return false;
  }
  return true;
}

SemiSymmetricStructure SemiSymmetricStructure::WithPrizes(
    std::span<const double> prizes) const {
  Require(prizes.size() == classes.size(),
          "expected one prize per size class");
  SemiSymmetricStructure out = *this;
  for (std::size_t k = 0; k < prizes.size(); ++k) out.classes[k].prize = prizes[k];
  return out;
}

std::vector<double> SemiSymmetricStructure::Prizes() const {
  std::vector<double> out;
  for (const auto& c : classes) out.push_back(c.prize);
  return out;
}

void SemiSymmetricStructure::Validate() const {
  Require(!classes.empty(), "structure has no size classes");
  int prev = 1;
  for (const auto& c : classes) {
    Require(c.size > prev, "size classes must be ascending, distinct and >= 2");
    Require(c.degree >= 1, "degree must be >= 1 for size " +
                               std::to_string(c.size));
    Require(std::isfinite(c.prize) && c.prize > 0.0,
            "prize must be positive for size " + std::to_string(c.size));
    prev = c.size;
  }
}

SemiSymmetryCheck CheckSemiSymmetry(const ConflictNetwork& net) {
  using Kind = SemiSymmetryViolation::Kind;
  SemiSymmetryCheck out;
  std::map<int, std::vector<std::size_t>> by_size;
  for (std::size_t t = 0; t < net.num_battles(); ++t) {
    by_size[net.battle(t).size()].push_back(t);
  }

  SemiSymmetricStructure structure;
  structure.cost = net.cost();
  for (const auto& [size, battles] : by_size) {
    const Battle& first = net.battle(battles.front());
    std::set<double> prizes;
    bool production_uniform = true;
    for (std::size_t t : battles) {
      prizes.insert(net.battle(t).prize);
      if (!(net.battle(t).production == first.production)) {
        production_uniform = false;
      }
    }
    if (prizes.size() > 1) {
      std::string list;
      for (double p : prizes) {
        list += (list.empty() ? "" : ",") + FormatShortest(p);
      }
      out.violations.push_back({Kind::kPrize, size, std::nullopt,
                                 "size-" + std::to_string(size) + " prizes {" +
                                     list + "} not constant"});
    }
    if (!production_uniform) {
      out.violations.push_back(
          {Kind::kProduction, size, std::nullopt,
           "size-" + std::to_string(size) +
               " battles use different production functions"});
    }

    std::vector<int> counts(net.num_players(), 0);
    for (std::size_t t : battles) {
      for (std::size_t pi : net.ParticipantIndices(t)) ++counts[pi];
    }
    const int expected = counts.front();
    for (std::size_t pi = 0; pi < counts.size(); ++pi) {
      if (counts[pi] != expected || counts[pi] == 0) {
        out.violations.push_back(
            {Kind::kDegree, size, net.players()[pi],
             "player " + std::to_string(net.players()[pi]) + " sits in " +
                 std::to_string(counts[pi]) + " size-" + std::to_string(size) +
                 " battles, expected " + std::to_string(expected)});
      }
    }
    structure.classes.push_back(
        {size, expected, first.prize, first.production});
  }
  if (out.violations.empty()) out.structure = std::move(structure);
  return out;
}

EffortProfile SizeDeterminedProfile(
    const ConflictNetwork& net, const std::map<int, double>& effort_by_size) {
  EffortProfile profile = EffortProfile::Zero(net);
  for (std::size_t t = 0; t < net.num_battles(); ++t) {
    auto it = effort_by_size.find(net.battle(t).size());
    Require(it != effort_by_size.end(),
            "no effort given for size " + std::to_string(net.battle(t).size()));
    for (std::size_t s = 0; s < net.battle(t).participants.size(); ++s) {
      profile.set(t, s, it->second);
    }
  }
  return profile;
}

}  // namespace conflictnet
