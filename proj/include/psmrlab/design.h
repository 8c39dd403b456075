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

#ifndef PSMRLAB_DESIGN_H_
#define PSMRLAB_DESIGN_H_

#include <vector>

#include "psmrlab/game.h"
#include "psmrlab/linalg.h"
#include "psmrlab/simplex.h"

namespace psmrlab {

// G-optimal exploration distribution over an action set.
struct ExplorationDesign {
  SimplexPoint p0;
  // S(p0) = sum_x p0(x) x x^T.
  Matrix s;
  double max_leverage = 0.0;
  // max_leverage / d.
  double c_achieved = 0.0;
  int iterations = 0;
};

inline constexpr double kDefaultKwTolerance = 0.01;
inline constexpr int kKwMaxIterations = 100000;

// sum_x p(x) x x^T.
Matrix VarianceMatrix(const SimplexPoint& p, const ActionSet& x);

// S(p)^{-1}; throws NumericalError when the support of p does not span.
Matrix InverseVarianceMatrix(const SimplexPoint& p, const ActionSet& x);
Matrix InvertVarianceMatrix(const Matrix& s);

// <x, S^{-1} x> for every action.
Vector Leverages(const Matrix& s_inv, const ActionSet& x);

// Frank-Wolfe (Fedorov-Wynn) ascent on log det S(p) from the uniform
// distribution with the closed-form exact line search, stopped once the
// maximum leverage is at most (1 + tol) d. The optional trace receives
// log det S after every iteration.
ExplorationDesign KieferWolfowitzDesign(
    const ActionSet& x, double tol = kDefaultKwTolerance,
    int max_iterations = kKwMaxIterations,
    std::vector<double>* logdet_trace = nullptr);

}  // namespace psmrlab

#endif  // PSMRLAB_DESIGN_H_
