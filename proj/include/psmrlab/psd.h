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

#ifndef PSMRLAB_PSD_H_
#define PSMRLAB_PSD_H_

#include "psmrlab/linalg.h"

namespace psmrlab {

// Regularized design matrix of a ridge regression together with its
// inverse, log-determinant and response vector. The inverse and the
// log-determinant are maintained by rank-one identities and refreshed from
// scratch every kRefreshPeriod updates.
struct PsdState {
  static constexpr int kRefreshPeriod = 4096;

  Matrix v;
  Matrix v_inv;
  double logdet = 0.0;
  Vector b;
  long updates = 0;

  int dim() const { return static_cast<int>(v.rows()); }
};

// V = lambda I, b = 0.
PsdState PsdInit(double lambda, int dim);

// V + a a^T, b + r a. Takes the state by value so callers can move it in.
PsdState PsdUpdate(PsdState state, const Vector& a, double r);

// In-place form of PsdUpdate.
void PsdUpdateInPlace(PsdState& state, const Vector& a, double r);

// sqrt(a^T V^{-1} a).
double WeightedNorm(const PsdState& state, const Vector& a);

// sqrt(a^T V a), the norm used by confidence ellipsoids.
double DesignNorm(const PsdState& state, const Vector& a);

// Ridge estimate V^{-1} b.
Vector RidgeEstimate(const PsdState& state);

}  // namespace psmrlab

#endif  // PSMRLAB_PSD_H_
