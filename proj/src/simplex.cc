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

#include "psmrlab/simplex.h"

#include <cmath>
#include <string>

#include "psmrlab/error.h"

namespace psmrlab {

bool IsDistribution(const Vector& w, double tol) {
  if (w.size() == 0) return false;
  for (double v : w) {
    if (!std::isfinite(v) || v < 0.0) return false;
  }
  return std::abs(w.sum() - 1.0) <= tol;
}

SimplexPoint::SimplexPoint(Vector weights, double tol)
    : weights_(std::move(weights)) {
  if (!IsDistribution(weights_, tol)) {
    throw ValidationError("not a probability vector (size " +
                          std::to_string(weights_.size()) + ", sum " +
                          std::to_string(weights_.sum()) + ")");
  }
}

SimplexPoint SimplexPoint::Uniform(int size) {
  if (size <= 0) throw InvalidArgumentError("empty simplex");
  return FromNormalized(Vector::Constant(size, 1.0 / size));
}

SimplexPoint SimplexPoint::PointMass(int size, int index) {
  if (index < 0 || index >= size) {
    throw InvalidArgumentError("point mass index out of range");
  }
  Vector w = Vector::Zero(size);
  w[index] = 1.0;
  return FromNormalized(std::move(w));
}

SimplexPoint SimplexPoint::FromNormalized(Vector weights) {
  SimplexPoint p;
  p.weights_ = std::move(weights);
  return p;
}

}  // namespace psmrlab
