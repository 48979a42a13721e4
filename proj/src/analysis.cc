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

#include "conflictnet/analysis.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "conflictnet/error.h"

namespace conflictnet {
namespace {

Curvature FamilyCurvature(const ProductionFunction& pf) {
  if (std::holds_alternative<PowerFamily>(pf.family())) {
    return Curvature::kLinear;
  }
  if (std::holds_alternative<RatioFamily>(pf.family()) ||
      std::holds_alternative<CaraFamily>(pf.family())) {
    return Curvature::kConvex;
  }
  // Piecewise: h has slope 1/r below the breakpoint and 1 above.
  const auto& p = std::get<PiecewisePowerAffineFamily>(pf.family());
  return p.exponent < 1.0 ? Curvature::kConcave : Curvature::kLinear;
}

Curvature SampledCurvature(double min_defect, double max_defect, double tol) {
  const bool below = min_defect < -tol;
  const bool above = max_defect > tol;
  if (!below && !above) return Curvature::kLinear;
  if (below && !above) return Curvature::kConvex;
  if (above && !below) return Curvature::kConcave;
  return Curvature::kIndeterminate;
}

}  // namespace

std::string CurvatureName(Curvature c) {
  switch (c) {
    case Curvature::kConvex:
      return "convex";
    case Curvature::kConcave:
      return "concave";
    case Curvature::kLinear:
      return "linear";
    case Curvature::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::string OrderingSymbol(Ordering o) {
  switch (o) {
    case Ordering::kLess:
      return "<";
    case Ordering::kEqual:
      return "=";
    case Ordering::kGreater:
      return ">";
  }
  return "?";
}

std::string RecommendationName(Recommendation r) {
  switch (r) {
    case Recommendation::kPreferUe:
      return "prefer UE";
    case Recommendation::kPreferDe:
      return "prefer DE";
    case Recommendation::kIndifferent:
      return "indifferent";
    case Recommendation::kNone:
      return "none";
  }
  return "none";
}

CurvatureOptions DefaultCurvatureOptions(const ProductionFunction& pf) {
  CurvatureOptions o;
  if (const auto* r = std::get_if<RatioFamily>(&pf.family())) {
    o.lo = 1e-3 * r->shift;
    o.hi = 1e3 * r->shift;
  } else if (const auto* c = std::get_if<CaraFamily>(&pf.family())) {
    o.lo = 1e-3 / c->rate;
    o.hi = 50.0 / c->rate;
  } else if (const auto* p =
                 std::get_if<PiecewisePowerAffineFamily>(&pf.family())) {
    o.lo = 1e-3 * p->breakpoint;
    o.hi = 1e3 * p->breakpoint;
  }
  return o;
}

CurvatureVerdict ClassifyH(const ProductionFunction& pf) {
  return ClassifyH(pf, DefaultCurvatureOptions(pf));
}

CurvatureVerdict ClassifyH(const ProductionFunction& pf,
                           const CurvatureOptions& options) {
  Require(options.samples >= 64, "curvature classification needs >= 64 samples");
  Require(options.lo > 0.0 && options.hi > options.lo,
          "curvature domain must be a positive interval");
  const std::vector<double> xs =
      SampleGrid{options.lo, options.hi, options.samples}.Points();
  std::vector<double> hs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) hs[i] = pf.H(xs[i]);

  CurvatureVerdict v;
  v.family = FamilyCurvature(pf);
  v.max_defect = -std::numeric_limits<double>::infinity();
  v.min_defect = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const double chord = 0.5 * (hs[i] + hs[j]);
      const double defect = (pf.H(0.5 * (xs[i] + xs[j])) - chord) / chord;
      v.max_defect = std::max(v.max_defect, defect);
      v.min_defect = std::min(v.min_defect, defect);
    }
  }
  v.sampled = SampledCurvature(v.min_defect, v.max_defect, options.tolerance);

  const std::vector<double> kinks = pf.Kinks();
  for (double x : xs) {
    bool skip = false;
    for (double k : kinks) skip = skip || std::abs(x - k) <= 1e-12 * k;
    if (skip) continue;
    const double f = pf.Value(x);
    const double f1 = pf.Derivative(x);
    const double f2 = pf.SecondDerivative(x);
    const double f3 = pf.ThirdDerivative(x);
    const double a = 2.0 * f * f2 * f2;
    const double b = f1 * f1 * f2;
    const double c = f * f1 * f3;
    const double e = a - b - c;
    const double scale = std::abs(a) + std::abs(b) + std::abs(c);
    if (!std::isfinite(e)) continue;
    if (std::abs(e) <= 1e-10 * scale) {
      ++v.third_zero;
    } else if (e > 0.0) {
      ++v.third_positive;
    } else {
      ++v.third_negative;
    }
  }

  switch (v.family) {
    case Curvature::kLinear:
      v.curvature = v.sampled == Curvature::kLinear &&
                            v.third_positive == 0 && v.third_negative == 0
                        ? Curvature::kLinear
                        : Curvature::kIndeterminate;
      break;
    case Curvature::kConvex:
      v.curvature = v.sampled == Curvature::kConvex && v.third_negative == 0
                        ? Curvature::kConvex
                        : Curvature::kIndeterminate;
      break;
    case Curvature::kConcave:
      v.curvature = v.sampled == Curvature::kConcave && v.third_positive == 0
                        ? Curvature::kConcave
                        : Curvature::kIndeterminate;
      break;
    case Curvature::kIndeterminate:
      v.curvature = Curvature::kIndeterminate;
      break;
  }
  return v;
}

ComparisonReport CompareRegimes(const SemiSymmetricStructure& ss,
                                const BracketingConfig& cfg) {
  ss.Validate();
  ComparisonReport r;
  r.structure = ss;
  r.de = SolveDe(ss, cfg);
  r.ue = SolveUe(ss, cfg);
  r.x_de = r.de.total;
  r.x_ue = r.ue.total;
  r.payoff_de = r.de.payoff;
  r.payoff_ue = r.ue.payoff;
  r.gap = std::abs(r.x_de - r.x_ue) / r.x_ue;
  if (r.gap <= kNeutralityTolerance) {
    r.ordering = Ordering::kEqual;
  } else {
    r.ordering = r.x_de < r.x_ue ? Ordering::kLess : Ordering::kGreater;
  }

  if (ss.SharedProduction()) {
    r.verdict = ClassifyH(ss.classes.front().production);
    r.curvature = r.verdict->curvature;
  } else {
    const bool all_power =
        std::all_of(ss.classes.begin(), ss.classes.end(),
                    [](const SizeClass& c) { return c.production.IsPower(); });
    r.curvature = all_power ? Curvature::kLinear : Curvature::kIndeterminate;
  }

  // Weak inequalities, with slack for root-finding error.
  constexpr double kSlack = 1e-9;
  const double x_slack = kSlack * r.x_ue;
  const double pay_slack =
      kSlack * std::max({1.0, std::abs(r.payoff_de), std::abs(r.payoff_ue)});
  switch (r.curvature) {
    case Curvature::kConvex:
      r.consistent = r.x_de <= r.x_ue + x_slack &&
                     r.payoff_de >= r.payoff_ue - pay_slack;
      r.recommendation = Recommendation::kPreferUe;
      break;
    case Curvature::kConcave:
      r.consistent = r.x_de >= r.x_ue - x_slack &&
                     r.payoff_de <= r.payoff_ue + pay_slack;
      r.recommendation = Recommendation::kPreferDe;
      break;
    case Curvature::kLinear: {
      const double pay_gap = std::abs(r.payoff_de - r.payoff_ue) /
                             std::max(1.0, std::abs(r.payoff_ue));
      r.consistent =
          r.gap <= kNeutralityTolerance && pay_gap <= kNeutralityTolerance;
      r.recommendation = Recommendation::kIndifferent;
      break;
    }
    case Curvature::kIndeterminate:
      break;
  }
  return r;
}

std::vector<RegimePoint> EvaluateRegimes(
    std::span<const SemiSymmetricStructure> structures,
    const BracketingConfig& cfg, Execution exec) {
  std::vector<RegimePoint> points(structures.size());
  ParallelFor(structures.size(), exec, [&](std::size_t i) {
    const DeResult de = SolveDe(structures[i], cfg);
    const UeResult ue = SolveUe(structures[i], cfg);
    points[i] = {de.total, ue.total, de.payoff, ue.payoff,
                 std::abs(de.total - ue.total) / ue.total};
  });
  return points;
}

NeutralityReport NeutralityCheck(const SemiSymmetricStructure& structure,
                                 const std::vector<std::vector<double>>& grid,
                                 const BracketingConfig& cfg,
                                 Execution exec) {
  Require(!grid.empty(), "valuation grid is empty");
  std::vector<SemiSymmetricStructure> instances;
  instances.reserve(grid.size());
  for (const auto& prizes : grid) {
    for (double v : prizes) {
      Require(std::isfinite(v) && v > 0.0, "grid prizes must be positive");
    }
    instances.push_back(structure.WithPrizes(prizes));
  }

  NeutralityReport report;
  report.points = EvaluateRegimes(instances, cfg, exec);
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const double gap = report.points[i].gap;
    report.gaps.push_back(gap);
    if (i == 0 || gap > report.max_gap) {
      report.max_gap = gap;
      report.worst_index = i;
    }
  }
  report.worst_prizes = grid[report.worst_index];
  report.neutral = report.max_gap <= kNeutralityTolerance;
  return report;
}

std::vector<std::vector<double>> RandomValuationGrid(std::size_t classes,
                                                     std::size_t count,
                                                     std::uint64_t seed,
                                                     double lo, double hi) {
  Require(lo > 0.0 && hi > lo, "valuation range must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(lo, hi);
  std::vector<std::vector<double>> grid(count, std::vector<double>(classes));
  for (auto& row : grid) {
    for (double& v : row) v = draw(rng);
  }
  return grid;
}

double TullockClosedFormTotal(const SemiSymmetricStructure& ss) {
  ss.Validate();
  Require(ss.cost.IsUnitQuadratic(),
          "closed form needs the quadratic cost X^2/2");
  double sum = 0.0;
  for (const auto& c : ss.classes) {
    const auto* p = std::get_if<PowerFamily>(&c.production.family());
    Require(p != nullptr, "closed form needs power production for size " +
                              std::to_string(c.size));
    sum += c.degree * c.prize * c.Weight() * p->exponent;
  }
  return std::sqrt(sum);
}

}  // namespace conflictnet
