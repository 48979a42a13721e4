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

#ifndef CONFLICTNET_COST_H_
#define CONFLICTNET_COST_H_

#include <cmath>
#include <string>

#include "conflictnet/error.h"
#include "conflictnet/format.h"

namespace conflictnet {

// C(X) = scale * X^exponent / exponent, exponent >= 1. Quadratic() is the
// standard X^2 / 2.
class CostFunction {
 public:
  static CostFunction Power(double scale, double exponent) {
    Require(std::isfinite(scale) && scale > 0.0, "cost scale must be positive");
    Require(std::isfinite(exponent) && exponent >= 1.0,
            "cost exponent must be >= 1");
    return CostFunction(scale, exponent);
  }
  static CostFunction Quadratic() { return CostFunction(1.0, 2.0); }

  double scale() const { return scale_; }
  double exponent() const { return exponent_; }

  double Value(double total) const {
    return scale_ * std::pow(total, exponent_) / exponent_;
  }
  double Marginal(double total) const {
    return scale_ * std::pow(total, exponent_ - 1.0);
  }
  double Curvature(double total) const {
    if (exponent_ == 1.0) return 0.0;
    return scale_ * (exponent_ - 1.0) * std::pow(total, exponent_ - 2.0);
  }

  bool IsUnitQuadratic() const { return scale_ == 1.0 && exponent_ == 2.0; }

  std::string Describe() const {
    return "power:" + FormatShortest(scale_) + "," + FormatShortest(exponent_);
  }

  bool operator==(const CostFunction&) const = default;

 private:
  CostFunction(double scale, double exponent)
      : scale_(scale), exponent_(exponent) {}

  double scale_;
  double exponent_;
};

}  // namespace conflictnet

#endif  // CONFLICTNET_COST_H_
