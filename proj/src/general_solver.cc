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

#include "conflictnet/general_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "conflictnet/error.h"

namespace conflictnet {
namespace {

// One of the player's battles as seen with rivals frozen.
struct Front {
  const Battle* battle = nullptr;
  double rivals = 0.0;  // sum of rival production values
};

std::vector<Front> FrontsOf(const ConflictNetwork& net, std::size_t pi,
                            const EffortProfile& profile) {
  std::vector<Front> fronts;
  for (const Seat& seat : net.SeatsOf(pi)) {
    const Battle& b = net.battle(seat.battle);
    double s = 0.0;
    for (std::size_t j = 0; j < b.participants.size(); ++j) {
      if (j != seat.slot) s += b.production.Value(profile.at(seat.battle, j));
    }
    fronts.push_back({&b, s});
  }
  return fronts;
}

double MarginalBenefit(const Front& f, double x) {
  const ProductionFunction& pf = f.battle->production;
  const double d = pf.Value(x) + f.rivals;
  return f.battle->prize * pf.Derivative(x) * f.rivals / (d * d);
}

double MarginalBenefitAtZero(const Front& f) {
  return f.battle->prize * f.battle->production.DerivativeAtZero() / f.rivals;
}

// Effort equating the battle's marginal benefit to `lambda`, or 0 at a
// corner.
double EffortAtMarginalCost(const Front& f, double lambda,
                            const BracketingConfig& cfg) {
  if (MarginalBenefitAtZero(f) <= lambda) return 0.0;
  return SolveIncreasing([&f](double x) { return -MarginalBenefit(f, x); },
                         -lambda, cfg);
}

BestResponse BestResponseByIndex(const ConflictNetwork& net, std::size_t pi,
                                 const EffortProfile& profile,
                                 const BracketingConfig& cfg, bool strict) {
  const std::vector<Front> fronts = FrontsOf(net, pi, profile);
  const auto seats = net.SeatsOf(pi);
  BestResponse br;
  br.efforts.assign(fronts.size(), 0.0);

  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < fronts.size(); ++k) {
    if (fronts[k].rivals > 0.0) {
      active.push_back(k);
    } else {
      br.degenerate_battles.push_back(seats[k].battle);
      br.efforts[k] = kFloorEffort;
    }
  }
  if (strict && !br.degenerate_battles.empty()) {
    Fail(ErrorCode::kDegenerateBattle,
         "all rivals of player " + std::to_string(net.players()[pi]) +
             " exert zero in battle '" +
             net.battle(br.degenerate_battles.front()).id + "'");
  }
  if (active.empty()) return br;

  const CostFunction& cost = net.cost();
  const double floor_total = kFloorEffort * br.degenerate_battles.size();
  const double lambda0 = cost.Marginal(floor_total);
  bool interior = false;
  for (std::size_t k : active) {
    if (MarginalBenefitAtZero(fronts[k]) > lambda0) interior = true;
  }
  if (!interior) {
    br.corner = true;
    return br;
  }

  auto supply = [&](double lambda) {
    double s = 0.0;
    for (std::size_t k : active) {
      s += EffortAtMarginalCost(fronts[k], lambda, cfg);
    }
    return s;
  };
  double lambda = lambda0;
  if (cost.exponent() != 1.0) {
    const double total = SolveIncreasing(
        [&](double x) { return x - floor_total - supply(cost.Marginal(x)); },
        0.0, cfg);
    lambda = cost.Marginal(total);
  }
  for (std::size_t k : active) {
    br.efforts[k] = EffortAtMarginalCost(fronts[k], lambda, cfg);
    if (br.efforts[k] == 0.0) br.corner = true;
  }
  return br;
}

double UniformBestResponseByIndex(const ConflictNetwork& net, std::size_t pi,
                                  const EffortProfile& profile,
                                  const BracketingConfig& cfg) {
  const std::vector<Front> fronts = FrontsOf(net, pi, profile);
  std::vector<Front> active;
  bool degenerate = false;
  for (const Front& f : fronts) {
    if (f.rivals > 0.0) {
      active.push_back(f);
    } else {
      degenerate = true;
    }
  }
  const double seats = static_cast<double>(fronts.size());
  const CostFunction& cost = net.cost();
  double effort = 0.0;
  if (!active.empty()) {
    double benefit_at_zero = 0.0;
    for (const Front& f : active) benefit_at_zero += MarginalBenefitAtZero(f);
    if (benefit_at_zero > seats * cost.Marginal(0.0)) {
      effort = SolveIncreasing(
          [&](double y) {
            double mb = 0.0;
            for (const Front& f : active) mb += MarginalBenefit(f, y);
            return seats * cost.Marginal(seats * y) - mb;
          },
          0.0, cfg);
    }
  }
  if (degenerate) effort = std::max(effort, kFloorEffort);
  return effort;
}

double UniformPayoffFromFronts(const ConflictNetwork& net,
                               const std::vector<Front>& fronts,
                               double effort) {
  double benefit = 0.0;
  for (const Front& f : fronts) {
    const double own = f.battle->production.Value(effort);
    const double denom = own + f.rivals;
    benefit += f.battle->prize *
               (denom == 0.0 ? 1.0 / f.battle->participants.size()
                             : own / denom);
  }
  return benefit - net.cost().Value(effort * fronts.size());
}

std::vector<std::string> DegenerateAt(const ConflictNetwork& net,
                                      const EffortProfile& profile) {
  std::set<std::string> names;
  for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
    for (const Front& f : FrontsOf(net, pi, profile)) {
      if (f.rivals == 0.0) names.insert(f.battle->id);
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace

InitialProfile InitialProfile::Constant(double value) {
  InitialProfile p;
  p.kind = Kind::kConstant;
  p.value = value;
  return p;
}

InitialProfile InitialProfile::Random(std::uint64_t seed, double lo,
                                      double hi) {
  InitialProfile p;
  p.kind = Kind::kRandom;
  p.seed = seed;
  p.lo = lo;
  p.hi = hi;
  return p;
}

InitialProfile InitialProfile::Explicit(EffortProfile profile) {
  InitialProfile p;
  p.kind = Kind::kExplicit;
  p.profile = std::move(profile);
  return p;
}

EffortProfile InitialProfile::Materialize(const ConflictNetwork& net,
                                          bool uniform) const {
  switch (kind) {
    case Kind::kConstant:
      return EffortProfile::Constant(net, value);
    case Kind::kRandom: {
      Require(lo >= 0.0 && hi > lo, "random initial range must be [lo, hi)");
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> draw(lo, hi);
      EffortProfile p = EffortProfile::Zero(net);
      for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
        const double shared = draw(rng);
        for (const Seat& seat : net.SeatsOf(pi)) {
          p.set(seat.battle, seat.slot, uniform ? shared : draw(rng));
        }
      }
      return p;
    }
    case Kind::kExplicit: {
      Require(profile.ShapeMatches(net),
              "explicit initial profile does not fit the network");
      if (!uniform) return profile;
      EffortProfile p = profile;
      for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
        const auto seats = net.SeatsOf(pi);
        const double mean = profile.Total(net, pi) / seats.size();
        for (const Seat& seat : seats) p.set(seat.battle, seat.slot, mean);
      }
      return p;
    }
  }
  return profile;
}

void IterationConfig::Validate() const {
  Require(max_iterations >= 1, "max_iterations must be positive");
  Require(tolerance > 0.0, "tolerance must be positive");
  Require(damping > 0.0 && damping <= 1.0, "damping must lie in (0, 1]");
  Require(oscillation_window >= 1, "oscillation window must be positive");
  inner.Validate();
}

BestResponse ComputeBestResponse(const ConflictNetwork& net, PlayerId player,
                                 const EffortProfile& profile,
                                 const BracketingConfig& cfg, bool strict) {
  Require(profile.ShapeMatches(net), "profile does not fit the network");
  return BestResponseByIndex(net, net.PlayerIndex(player), profile, cfg,
                             strict);
}

double ComputeUniformBestResponse(const ConflictNetwork& net, PlayerId player,
                                  const EffortProfile& profile,
                                  const BracketingConfig& cfg) {
  Require(profile.ShapeMatches(net), "profile does not fit the network");
  return UniformBestResponseByIndex(net, net.PlayerIndex(player), profile, cfg);
}

double UniformPayoff(const ConflictNetwork& net, const EffortProfile& profile,
                     std::size_t player_index, double effort) {
  return UniformPayoffFromFronts(net, FrontsOf(net, player_index, profile),
                                 effort);
}

std::vector<std::vector<double>> AllBestResponses(const ConflictNetwork& net,
                                                  const EffortProfile& profile,
                                                  const BracketingConfig& cfg,
                                                  Execution exec) {
  std::vector<std::vector<double>> out(net.num_players());
  ParallelFor(net.num_players(), exec, [&](std::size_t pi) {
    out[pi] = BestResponseByIndex(net, pi, profile, cfg, false).efforts;
  });
  return out;
}

std::vector<double> AllUniformBestResponses(const ConflictNetwork& net,
                                            const EffortProfile& profile,
                                            const BracketingConfig& cfg,
                                            Execution exec) {
  std::vector<double> out(net.num_players());
  ParallelFor(net.num_players(), exec, [&](std::size_t pi) {
    out[pi] = UniformBestResponseByIndex(net, pi, profile, cfg);
  });
  return out;
}

namespace {

// Shared outer loop. `respond` maps the frozen profile to each player's
// target efforts in SeatsOf order.
template <class Respond>
SolveOutcome Iterate(const ConflictNetwork& net, const IterationConfig& cfg,
                     EffortProfile x, Respond respond) {
  SolveOutcome out;
  double weight = cfg.damping;
  double previous = std::numeric_limits<double>::infinity();
  int streak = 0;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const std::vector<std::vector<double>> targets = respond(x);
    EffortProfile next = x;
    double change = 0.0;
    for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
      const auto seats = net.SeatsOf(pi);
      for (std::size_t k = 0; k < seats.size(); ++k) {
        const double old = x.at(seats[k].battle, seats[k].slot);
        const double v = (1.0 - weight) * old + weight * targets[pi][k];
        change = std::max(change, std::abs(v - old));
        next.set(seats[k].battle, seats[k].slot, v);
      }
    }
    x = std::move(next);
    out.iterations = it;
    out.last_change = change;
    if (change < cfg.tolerance) {
      out.converged = true;
      break;
    }
    streak = change >= previous ? streak + 1 : 0;
    if (streak >= cfg.oscillation_window) {
      weight *= 0.5;
      streak = 0;
    }
    previous = change;
  }
  out.damping = weight;
  out.profile = std::move(x);
  out.totals = out.profile.Totals(net);
  out.degenerate_battles = DegenerateAt(net, out.profile);
  return out;
}

}  // namespace

SolveOutcome SolveNashIterative(const ConflictNetwork& net,
                                const IterationConfig& cfg) {
  cfg.Validate();
  SolveOutcome out = Iterate(
      net, cfg, cfg.initial.Materialize(net, false),
      [&](const EffortProfile& x) {
        return AllBestResponses(net, x, cfg.inner, cfg.execution);
      });

  const auto br = AllBestResponses(net, out.profile, cfg.inner, cfg.execution);
  double gain = 0.0;
  for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
    EffortProfile deviated = out.profile;
    deviated.SetPlayerEfforts(net, pi, br[pi]);
    gain = std::max(gain, PayoffByIndex(net, deviated, pi) -
                              PayoffByIndex(net, out.profile, pi));
  }
  out.deviation_gain = gain;
  return out;
}

SolveOutcome SolveNashUeIterative(const ConflictNetwork& net,
                                  const IterationConfig& cfg) {
  cfg.Validate();
  SolveOutcome out = Iterate(
      net, cfg, cfg.initial.Materialize(net, true),
      [&](const EffortProfile& x) {
        const auto levels =
            AllUniformBestResponses(net, x, cfg.inner, cfg.execution);
        std::vector<std::vector<double>> targets(net.num_players());
        for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
          targets[pi].assign(net.SeatsOf(pi).size(), levels[pi]);
        }
        return targets;
      });

  const auto levels =
      AllUniformBestResponses(net, out.profile, cfg.inner, cfg.execution);
  double gain = 0.0;
  for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
    const double current =
        out.profile.Total(net, pi) / net.SeatsOf(pi).size();
    gain = std::max(gain, UniformPayoff(net, out.profile, pi, levels[pi]) -
                              UniformPayoff(net, out.profile, pi, current));
  }
  out.deviation_gain = gain;
  return out;
}

// ---------------------------------------------------------------------------
// Brute force.

namespace {

struct ScanLayout {
  std::size_t dims = 0;
  std::size_t points = 0;
  std::size_t total = 0;
  // Per player: the dimensions it controls.
  std::vector<std::vector<std::size_t>> player_dims;
  // Per dimension: the seats it sets.
  std::vector<std::vector<Seat>> dim_seats;
  double epsilon = 0.0;
};

ScanLayout MakeLayout(const ConflictNetwork& net, const BruteForceConfig& cfg) {
  Require(cfg.grid.points >= 2 && cfg.grid.points <= kMaxGridPoints,
          "grid must have between 2 and 201 points per dimension");
  Require(cfg.grid.lo >= 0.0 && cfg.grid.hi > cfg.grid.lo,
          "grid must cover a nonnegative interval");
  ScanLayout layout;
  layout.player_dims.resize(net.num_players());
  for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
    const auto seats = net.SeatsOf(pi);
    if (cfg.uniform) {
      layout.player_dims[pi].push_back(layout.dim_seats.size());
      layout.dim_seats.emplace_back(seats.begin(), seats.end());
    } else {
      for (const Seat& seat : seats) {
        layout.player_dims[pi].push_back(layout.dim_seats.size());
        layout.dim_seats.push_back({seat});
      }
    }
  }
  layout.dims = layout.dim_seats.size();
  if (layout.dims > kMaxBruteForceDimensions) {
    Fail(ErrorCode::kDimensionTooLarge,
         std::to_string(layout.dims) + " effort dimensions exceed the limit of " +
             std::to_string(kMaxBruteForceDimensions));
  }
  layout.points = static_cast<std::size_t>(cfg.grid.points);
  layout.total = 1;
  for (std::size_t d = 0; d < layout.dims; ++d) layout.total *= layout.points;
  layout.epsilon = cfg.epsilon > 0.0
                       ? cfg.epsilon
                       : 2.0 * cfg.grid.step() * net.MaxPrize();
  return layout;
}

void Decode(std::size_t index, std::size_t points, std::vector<int>& digits) {
  for (std::size_t d = 0; d < digits.size(); ++d) {
    digits[d] = static_cast<int>(index % points);
    index /= points;
  }
}

EffortProfile ProfileFor(const ConflictNetwork& net, const ScanLayout& layout,
                         const EffortGrid& grid,
                         const std::vector<int>& digits) {
  EffortProfile p = EffortProfile::Zero(net);
  for (std::size_t d = 0; d < layout.dims; ++d) {
    for (const Seat& seat : layout.dim_seats[d]) {
      p.set(seat.battle, seat.slot, grid.at(digits[d]));
    }
  }
  return p;
}

void SortCandidates(std::vector<NashCandidate>& c, std::size_t points) {
  auto flat = [points](const NashCandidate& n) {
    std::size_t idx = 0;
    for (std::size_t d = n.grid_index.size(); d-- > 0;) {
      idx = idx * points + n.grid_index[d];
    }
    return idx;
  };
  std::stable_sort(c.begin(), c.end(),
                   [&](const NashCandidate& a, const NashCandidate& b) {
                     if (a.max_gain != b.max_gain) return a.max_gain < b.max_gain;
                     return flat(a) < flat(b);
                   });
}

}  // namespace

BruteForceResult BruteForceNash(const ConflictNetwork& net,
                                const BruteForceConfig& cfg) {
  const ScanLayout layout = MakeLayout(net, cfg);
  const std::size_t P = layout.points;

  // Production value of every grid level in every battle.
  std::vector<std::vector<double>> table(net.num_battles(),
                                         std::vector<double>(P));
  for (std::size_t t = 0; t < net.num_battles(); ++t) {
    for (std::size_t j = 0; j < P; ++j) {
      table[t][j] = net.battle(t).production.Value(cfg.grid.at(j));
    }
  }
  // dim_of[battle][slot] -> dimension.
  std::vector<std::vector<std::size_t>> dim_of(net.num_battles());
  for (std::size_t t = 0; t < net.num_battles(); ++t) {
    dim_of[t].resize(net.battle(t).participants.size());
  }
  for (std::size_t d = 0; d < layout.dims; ++d) {
    for (const Seat& seat : layout.dim_seats[d]) dim_of[seat.battle][seat.slot] = d;
  }

  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (layout.total + kChunk - 1) / kChunk;
  std::vector<std::vector<NashCandidate>> found(chunks);

  ParallelFor(chunks, cfg.execution, [&](std::size_t chunk) {
    std::vector<int> digits(layout.dims);
    std::vector<int> own(layout.dims);
    const std::size_t end = std::min(layout.total, (chunk + 1) * kChunk);
    for (std::size_t index = chunk * kChunk; index < end; ++index) {
      Decode(index, P, digits);
      double worst = 0.0;
      for (std::size_t pi = 0; pi < net.num_players() && worst <= layout.epsilon;
           ++pi) {
        const auto seats = net.SeatsOf(pi);
        const auto& dims = layout.player_dims[pi];
        std::vector<double> rivals(seats.size(), 0.0);
        for (std::size_t k = 0; k < seats.size(); ++k) {
          const std::size_t t = seats[k].battle;
          for (std::size_t s = 0; s < dim_of[t].size(); ++s) {
            if (s != seats[k].slot) rivals[k] += table[t][digits[dim_of[t][s]]];
          }
        }
        auto payoff = [&](const std::vector<int>& mine) {
          double benefit = 0.0;
          double total = 0.0;
          for (std::size_t k = 0; k < seats.size(); ++k) {
            const Battle& b = net.battle(seats[k].battle);
            const int level = mine[dims[cfg.uniform ? 0 : k]];
            const double f = table[seats[k].battle][level];
            const double denom = f + rivals[k];
            benefit += b.prize *
                       (denom == 0.0 ? 1.0 / b.participants.size() : f / denom);
            total += cfg.grid.at(level);
          }
          return benefit - net.cost().Value(total);
        };
        const double current = payoff(digits);
        own = digits;
        const std::size_t combos = [&] {
          std::size_t c = 1;
          for (std::size_t n = 0; n < dims.size(); ++n) c *= P;
          return c;
        }();
        double best = current;
        for (std::size_t c = 0; c < combos; ++c) {
          std::size_t rest = c;
          for (std::size_t dim : dims) {
            own[dim] = static_cast<int>(rest % P);
            rest /= P;
          }
          best = std::max(best, payoff(own));
        }
        worst = std::max(worst, best - current);
      }
      if (worst <= layout.epsilon) {
        found[chunk].push_back(
            {digits, ProfileFor(net, layout, cfg.grid, digits), worst});
      }
    }
  });

  BruteForceResult result;
  result.epsilon = layout.epsilon;
  result.dimensions = layout.dims;
  result.profiles_scanned = layout.total;
  for (auto& part : found) {
    for (auto& c : part) result.candidates.push_back(std::move(c));
  }
  SortCandidates(result.candidates, P);
  return result;
}

BruteForceResult BruteForceNashReference(const ConflictNetwork& net,
                                         const BruteForceConfig& cfg) {
  const ScanLayout layout = MakeLayout(net, cfg);
  const std::size_t P = layout.points;
  BruteForceResult result;
  result.epsilon = layout.epsilon;
  result.dimensions = layout.dims;
  result.profiles_scanned = layout.total;

  std::vector<int> digits(layout.dims);
  for (std::size_t index = 0; index < layout.total; ++index) {
    Decode(index, P, digits);
    const EffortProfile profile = ProfileFor(net, layout, cfg.grid, digits);
    double worst = 0.0;
    for (std::size_t pi = 0; pi < net.num_players(); ++pi) {
      const double current = PayoffByIndex(net, profile, pi);
      const auto& dims = layout.player_dims[pi];
      std::size_t combos = 1;
      for (std::size_t n = 0; n < dims.size(); ++n) combos *= P;
      std::vector<int> own = digits;
      double best = current;
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t rest = c;
        for (std::size_t dim : dims) {
          own[dim] = static_cast<int>(rest % P);
          rest /= P;
        }
        best = std::max(
            best, PayoffByIndex(net, ProfileFor(net, layout, cfg.grid, own), pi));
      }
      worst = std::max(worst, best - current);
    }
    if (worst <= layout.epsilon) {
      result.candidates.push_back({digits, profile, worst});
    }
  }
  SortCandidates(result.candidates, P);
  return result;
}

}  // namespace conflictnet
