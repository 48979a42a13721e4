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

#ifndef CONFLICTNET_PRODUCTION_H_
#define CONFLICTNET_PRODUCTION_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conflictnet {

// f(x) = scale * x^exponent, exponent in (0, 1].
struct PowerFamily {
  double scale = 1.0;
  double exponent = 1.0;
  bool operator==(const PowerFamily&) const = default;
};

// f(x) = x / (x + shift).
struct RatioFamily {
  double shift = 1.0;
  bool operator==(const RatioFamily&) const = default;
};

// f(x) = 1 - exp(-rate * x).
struct CaraFamily {
  double rate = 1.0;
  bool operator==(const CaraFamily&) const = default;
};

// f(x) = scale * x^exponent for x <= breakpoint, slope * x + intercept above.
// The affine piece is pinned by value and first-derivative matching at the
// breakpoint, so f is C^1 but generally not C^2 there.
struct PiecewisePowerAffineFamily {
  double breakpoint = 1.0;
  double scale = 2.0;
  double exponent = 0.5;
  double slope = 1.0;
  double intercept = 1.0;
  bool operator==(const PiecewisePowerAffineFamily&) const = default;
};

using ProductionFamily = std::variant<PowerFamily, RatioFamily, CaraFamily,
                                      PiecewisePowerAffineFamily>;

// A contest production function with analytic derivatives. Immutable; the
// factories check parameter ranges and throw kPreconditionViolation.
class ProductionFunction {
 public:
  static ProductionFunction Power(double scale, double exponent);
  static ProductionFunction Ratio(double shift);
  static ProductionFunction Cara(double rate);
  // Derives the affine piece from C^1 matching at `breakpoint`.
  static ProductionFunction PiecewisePowerAffine(double breakpoint,
                                                 double scale,
                                                 double exponent);
  // Explicit affine piece; rejected unless it matches the power piece in
  // value and slope at the breakpoint (relative 1e-9).
  static ProductionFunction PiecewisePowerAffine(double breakpoint,
                                                 double scale, double exponent,
                                                 double slope,
                                                 double intercept);
  // 2*sqrt(x) up to 1, x + 1 beyond.
  static ProductionFunction PiecewiseF3();

  const ProductionFamily& family() const { return family_; }

  double Value(double x) const;
  double Derivative(double x) const;
  double SecondDerivative(double x) const;
  // Every supported family has an analytic third derivative away from kinks.
  double ThirdDerivative(double x) const;

  // h = f / f', evaluated in closed form per family.
  double H(double x) const;
  double HDerivative(double x) const;

  // Points where f'' is undefined.
  std::vector<double> Kinks() const;

  // Value of f' as x -> 0+ (may be +infinity).
  double DerivativeAtZero() const;

  // Human-readable tag: "power:2,0.5", "ratio:1", "cara:1",
  // "piecewise:1,2,0.5".
  std::string Describe() const;

  bool IsPower() const { return std::holds_alternative<PowerFamily>(family_); }

  bool operator==(const ProductionFunction&) const = default;

 private:
  explicit ProductionFunction(ProductionFamily family)
      : family_(std::move(family)) {}

  ProductionFamily family_;
};

// Parses the CLI shorthand: "power:A,r", "ratio:c", "cara:alpha",
// "piecewise:s,A,r" or "piecewise-f3".
ProductionFunction ParseProduction(const std::string& text);

// Log-spaced sample grid over [lo, hi].
struct SampleGrid {
  double lo = 1e-6;
  double hi = 1e3;
  int count = 64;

  std::vector<double> Points() const;
};

// A grid suited to the family's natural scale; CARA grids stop before
// f' underflows.
SampleGrid DefaultGridFor(const ProductionFunction& pf);

struct ValidityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidityReport {
  std::vector<ValidityCheck> checks;

  bool ok() const;
  const ValidityCheck* Find(const std::string& name) const;
};

// Threshold standing in for lim_{x->0+} h(x) = 0 at the smallest grid point.
inline constexpr double kSmallHThreshold = 1e-2;

// Requires >= 32 strictly positive points spanning >= 4 decades. Throws
// kNonFiniteEvaluation if f or f' is not finite at a grid point.
ValidityReport ValidateProduction(const ProductionFunction& pf,
                                  const SampleGrid& grid = {});

}  // namespace conflictnet

#endif  // CONFLICTNET_PRODUCTION_H_
