// Copyright 2026 The PSMRLab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSMRLAB_SIMPLEX_H_
#define PSMRLAB_SIMPLEX_H_

#include <span>

#include "psmrlab/linalg.h"

namespace psmrlab {

inline constexpr double kSimplexTolerance = 1e-10;

// A probability vector over a finite action set.
class SimplexPoint {
 public:
  SimplexPoint() = default;
  // Validates nonnegativity and unit sum within `tol`.
  explicit SimplexPoint(Vector weights, double tol = kSimplexTolerance);

  static SimplexPoint Uniform(int size);
  static SimplexPoint PointMass(int size, int index);
  // Trusts the caller; used by solvers that renormalize themselves.
  static SimplexPoint FromNormalized(Vector weights);

  int size() const { return static_cast<int>(weights_.size()); }
  double operator[](int i) const { return weights_[i]; }
  const Vector& weights() const { return weights_; }
  std::span<const double> span() const {
    return {weights_.data(), static_cast<size_t>(weights_.size())};
  }
  double MaxWeight() const { return weights_.maxCoeff(); }

 private:
  Vector weights_;
};

// True when `w` is nonnegative and sums to one within `tol`.
bool IsDistribution(const Vector& w, double tol = kSimplexTolerance);

}  // namespace psmrlab

#endif  // PSMRLAB_SIMPLEX_H_
