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

#include "conflictnet/production.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "conflictnet/error.h"
#include "conflictnet/format.h"

namespace conflictnet {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool IsPositiveFinite(double v) { return std::isfinite(v) && v > 0.0; }

void CheckExponent(double exponent) {
  Require(std::isfinite(exponent) && exponent > 0.0 && exponent <= 1.0,
          "power exponent must lie in (0, 1], got " +
              FormatShortest(exponent));
}

}  // namespace

ProductionFunction ProductionFunction::Power(double scale, double exponent) {
  Require(IsPositiveFinite(scale), "power scale must be positive");
  CheckExponent(exponent);
  return ProductionFunction(PowerFamily{scale, exponent});
}

ProductionFunction ProductionFunction::Ratio(double shift) {
  Require(IsPositiveFinite(shift), "ratio shift must be positive");
  return ProductionFunction(RatioFamily{shift});
}

ProductionFunction ProductionFunction::Cara(double rate) {
  Require(IsPositiveFinite(rate), "CARA rate must be positive");
  return ProductionFunction(CaraFamily{rate});
}

ProductionFunction ProductionFunction::PiecewisePowerAffine(double breakpoint,
                                                            double scale,
                                                            double exponent) {
  Require(IsPositiveFinite(breakpoint), "breakpoint must be positive");
  Require(IsPositiveFinite(scale), "power scale must be positive");
  CheckExponent(exponent);
  const double slope = scale * exponent * std::pow(breakpoint, exponent - 1.0);
  const double intercept =
      scale * std::pow(breakpoint, exponent) - slope * breakpoint;
  return ProductionFunction(PiecewisePowerAffineFamily{
      breakpoint, scale, exponent, slope, intercept});
}

ProductionFunction ProductionFunction::PiecewisePowerAffine(
    double breakpoint, double scale, double exponent, double slope,
    double intercept) {
  ProductionFunction derived = PiecewisePowerAffine(breakpoint, scale, exponent);
  const auto& fam = std::get<PiecewisePowerAffineFamily>(derived.family_);
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  };
  Require(close(slope, fam.slope),
          "affine slope does not match power derivative at breakpoint");
  Require(close(intercept, fam.intercept),
          "affine intercept breaks continuity at breakpoint");
  return derived;
}

ProductionFunction ProductionFunction::PiecewiseF3() {
  return PiecewisePowerAffine(1.0, 2.0, 0.5);
}

double ProductionFunction::Value(double x) const {
  return std::visit(
      Overloaded{
          [x](const PowerFamily& p) { return p.scale * std::pow(x, p.exponent); },
          [x](const RatioFamily& p) { return x / (x + p.shift); },
          [x](const CaraFamily& p) { return -std::expm1(-p.rate * x); },
          [x](const PiecewisePowerAffineFamily& p) {
            return x <= p.breakpoint ? p.scale * std::pow(x, p.exponent)
                                     : p.slope * x + p.intercept;
          },
      },
      family_);
}

double ProductionFunction::Derivative(double x) const {
  return std::visit(
      Overloaded{
          [x](const PowerFamily& p) {
            return p.scale * p.exponent * std::pow(x, p.exponent - 1.0);
          },
          [x](const RatioFamily& p) {
            const double d = x + p.shift;
            return p.shift / (d * d);
          },
          [x](const CaraFamily& p) { return p.rate * std::exp(-p.rate * x); },
          [x](const PiecewisePowerAffineFamily& p) {
            return x <= p.breakpoint
                       ? p.scale * p.exponent * std::pow(x, p.exponent - 1.0)
                       : p.slope;
          },
      },
      family_);
}

double ProductionFunction::SecondDerivative(double x) const {
  return std::visit(
      Overloaded{
          [x](const PowerFamily& p) {
            return p.scale * p.exponent * (p.exponent - 1.0) *
                   std::pow(x, p.exponent - 2.0);
          },
          [x](const RatioFamily& p) {
            const double d = x + p.shift;
            return -2.0 * p.shift / (d * d * d);
          },
          [x](const CaraFamily& p) {
            return -p.rate * p.rate * std::exp(-p.rate * x);
          },
          [x](const PiecewisePowerAffineFamily& p) {
            return x <= p.breakpoint ? p.scale * p.exponent *
                                           (p.exponent - 1.0) *
                                           std::pow(x, p.exponent - 2.0)
                                     : 0.0;
          },
      },
      family_);
}

double ProductionFunction::ThirdDerivative(double x) const {
  return std::visit(
      Overloaded{
          [x](const PowerFamily& p) {
            return p.scale * p.exponent * (p.exponent - 1.0) *
                   (p.exponent - 2.0) * std::pow(x, p.exponent - 3.0);
          },
          [x](const RatioFamily& p) {
            const double d = x + p.shift;
            return 6.0 * p.shift / (d * d * d * d);
          },
          [x](const CaraFamily& p) {
            return p.rate * p.rate * p.rate * std::exp(-p.rate * x);
          },
          [x](const PiecewisePowerAffineFamily& p) {
            return x <= p.breakpoint
                       ? p.scale * p.exponent * (p.exponent - 1.0) *
                             (p.exponent - 2.0) * std::pow(x, p.exponent - 3.0)
                       : 0.0;
          },
      },
      family_);
}

double ProductionFunction::H(double x) const {
  return std::visit(
      Overloaded{
          [x](const PowerFamily& p) { return x / p.exponent; },
          [x](const RatioFamily& p) { return x * (x + p.shift) / p.shift; },
          [x](const CaraFamily& p) { return std::expm1(p.rate * x) / p.rate; },
          [x](const PiecewisePowerAffineFamily& p) {
            return x <= p.breakpoint ? x / p.exponent
                                     : x + p.intercept / p.slope;
          },
      },
      family_);
}

double ProductionFunction::HDerivative(double x) const {
  return std::visit(
      Overloaded{
          [](const PowerFamily& p) { return 1.0 / p.exponent; },
          [x](const RatioFamily& p) { return (2.0 * x + p.shift) / p.shift; },
          [x](const CaraFamily& p) { return std::exp(p.rate * x); },
          [x](const PiecewisePowerAffineFamily& p) {
            return x <= p.breakpoint ? 1.0 / p.exponent : 1.0;
          },
      },
      family_);
}

std::vector<double> ProductionFunction::Kinks() const {
  if (const auto* p = std::get_if<PiecewisePowerAffineFamily>(&family_)) {
    return {p->breakpoint};
  }
  return {};
}

double ProductionFunction::DerivativeAtZero() const {
  return std::visit(
      Overloaded{
          [](const PowerFamily& p) {
            return p.exponent < 1.0 ? std::numeric_limits<double>::infinity()
                                    : p.scale;
          },
          [](const RatioFamily& p) { return 1.0 / p.shift; },
          [](const CaraFamily& p) { return p.rate; },
          [](const PiecewisePowerAffineFamily& p) {
            return p.exponent < 1.0 ? std::numeric_limits<double>::infinity()
                                    : p.scale;
          },
      },
      family_);
}

std::string ProductionFunction::Describe() const {
  return std::visit(
      Overloaded{
          [](const PowerFamily& p) {
            return "power:" + FormatShortest(p.scale) + "," +
                   FormatShortest(p.exponent);
          },
          [](const RatioFamily& p) {
            return "ratio:" + FormatShortest(p.shift);
          },
          [](const CaraFamily& p) { return "cara:" + FormatShortest(p.rate); },
          [](const PiecewisePowerAffineFamily& p) {
            return "piecewise:" + FormatShortest(p.breakpoint) + "," +
                   FormatShortest(p.scale) + "," + FormatShortest(p.exponent);
          },
      },
      family_);
}

ProductionFunction ParseProduction(const std::string& text) {
  if (text == "piecewise-f3") return ProductionFunction::PiecewiseF3();
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    Fail(ErrorCode::kSchemaError, "production spec needs 'family:params': '" +
                                      text + "'");
  }
  const std::string family = text.substr(0, colon);
  std::vector<double> params;
  for (const auto& part : SplitString(text.substr(colon + 1), ',')) {
    params.push_back(ParseNumber(part));
  }
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      Fail(ErrorCode::kSchemaError, "'" + family + "' takes " +
                                        std::to_string(n) + " parameter(s)");
    }
  };
  if (family == "power") {
    expect(2);
    return ProductionFunction::Power(params[0], params[1]);
  }
  if (family == "ratio") {
    expect(1);
    return ProductionFunction::Ratio(params[0]);
  }
  if (family == "cara") {
    expect(1);
    return ProductionFunction::Cara(params[0]);
  }
  if (family == "piecewise") {
    expect(3);
    return ProductionFunction::PiecewisePowerAffine(params[0], params[1],
                                                    params[2]);
  }
  Fail(ErrorCode::kSchemaError, "unknown production family '" + family + "'");
}

std::vector<double> SampleGrid::Points() const {
  std::vector<double> points;
  if (count <= 0) return points;
  if (count == 1) return {lo};
  points.reserve(count);
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    points.push_back(i + 1 == count ? hi : std::exp(log_lo + step * i));
  }
  points.front() = lo;
  return points;
}

SampleGrid DefaultGridFor(const ProductionFunction& pf) {
  const double scale = std::visit(
      Overloaded{
          [](const PowerFamily&) { return 1.0; },
          [](const RatioFamily& p) { return p.shift; },
          [](const CaraFamily& p) { return 1.0 / p.rate; },
          [](const PiecewisePowerAffineFamily& p) { return p.breakpoint; },
      },
      pf.family());
  SampleGrid grid;
  grid.lo = 1e-6 * std::min(1.0, scale);
  grid.hi = 1e3 * std::max(1.0, scale);
  if (const auto* cara = std::get_if<CaraFamily>(&pf.family())) {
    grid.hi = std::min(grid.hi, 500.0 / cara->rate);
  }
  grid.count = 64;
  return grid;
}

bool ValidityReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const ValidityCheck* ValidityReport::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidityReport ValidateProduction(const ProductionFunction& pf,
                                  const SampleGrid& grid) {
  Require(grid.count >= 32, "validation grid needs at least 32 points");
  Require(grid.lo > 0.0 && grid.hi > grid.lo && std::isfinite(grid.hi),
          "validation grid must be strictly positive and increasing");
  Require(grid.hi / grid.lo >= 1e4 * (1.0 - 1e-12),
          "validation grid must span at least 4 decades");

  const std::vector<double> xs = grid.Points();
  const std::vector<double> kinks = pf.Kinks();
  auto near_kink = [&](double x) {
    for (double k : kinks) {
      if (std::abs(x - k) <= 1e-12 * k) return true;
    }
    return false;
  };

  ValidityReport report;
  const double f0 = pf.Value(0.0);
  report.checks.push_back(
      {"f_zero", f0 == 0.0, "f(0) = " + FormatShortest(f0)});

  bool fp_ok = true;
  bool fpp_ok = true;
  bool h_ok = true;
  std::string fp_detail, fpp_detail, h_detail;
  double prev_h = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double f = pf.Value(x);
    const double fp = pf.Derivative(x);
    if (!std::isfinite(f) || !std::isfinite(fp)) {
      Fail(ErrorCode::kNonFiniteEvaluation,
           pf.Describe() + " at x = " + FormatShortest(x));
    }
    if (fp_ok && !(fp > 0.0)) {
      fp_ok = false;
      fp_detail = "f'(" + FormatShortest(x) + ") = " + FormatShortest(fp);
    }
    if (fpp_ok && !near_kink(x)) {
      const double fpp = pf.SecondDerivative(x);
      if (!(fpp <= 0.0)) {
        fpp_ok = false;
        fpp_detail = "f''(" + FormatShortest(x) + ") = " + FormatShortest(fpp);
      }
    }
    const double h = pf.H(x);
    if (h_ok && (!std::isfinite(h) || (i > 0 && !(h > prev_h)))) {
      h_ok = false;
      h_detail = "h not increasing at x = " + FormatShortest(x);
    }
    prev_h = h;
  }
  report.checks.push_back({"f_prime_positive", fp_ok, fp_detail});
  report.checks.push_back({"f_second_nonpositive", fpp_ok, fpp_detail});
  report.checks.push_back({"h_strictly_increasing", h_ok, h_detail});
  const double h_min = pf.H(xs.front());
  report.checks.push_back({"h_vanishes_at_zero", h_min < kSmallHThreshold,
                           "h(" + FormatShortest(xs.front()) +
                               ") = " + FormatShortest(h_min)});
  return report;
}

}  // namespace conflictnet
