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

#ifndef PSMRLAB_TSALLIS_H_
#define PSMRLAB_TSALLIS_H_

#include <optional>

#include "psmrlab/linalg.h"
#include "psmrlab/simplex.h"

namespace psmrlab {

// (1/alpha) * sum_i (p_i^alpha - p_i). Nonnegative and concave on the
// simplex; zero exactly at the vertices.
double TsallisPotential(const Vector& p, double alpha);
inline double TsallisPotential(const SimplexPoint& p, double alpha) {
  return TsallisPotential(p.weights(), alpha);
}

struct FtrlSolution {
  SimplexPoint point;
  // Normalizing Lagrange multiplier, stored as its offset from max(L).
  double multiplier_offset = 0.0;
  int iterations = 0;
};

inline constexpr int kFtrlMaxIterations = 200;

// argmax_p <p, L> + (1/eta) * TsallisPotential(p, alpha) over the simplex.
//
// Stationarity gives p_i = (eta * (mu - L_i) + 1/alpha)^(1/(alpha-1)); the
// multiplier mu is found by Newton's method on the (convex, decreasing)
// normalization residual, safeguarded by a bisection bracket. A previous
// multiplier offset may be passed to warm-start the iteration.
FtrlSolution FtrlTsallisSolveDetailed(
    const Vector& cumulative, double eta, double alpha,
    std::optional<double> warm_offset = std::nullopt);

inline SimplexPoint FtrlTsallisSolve(const Vector& cumulative, double eta,
                                     double alpha) {
  return FtrlTsallisSolveDetailed(cumulative, eta, alpha).point;
}

// argmax_p <p, L> + beta * phi_alpha(p) + beta_bar * phi_{1-alpha}(p).
//
// Each coordinate's stationarity function is strictly decreasing in p_i, so
// for a fixed multiplier every p_i comes from a bracketed monotone 1-D solve;
// the multiplier itself is found by a safeguarded outer Newton iteration.
FtrlSolution FtrlHybridSolveDetailed(
    const Vector& cumulative, double beta, double beta_bar, double alpha,
    std::optional<double> warm_offset = std::nullopt);

inline SimplexPoint FtrlHybridSolve(const Vector& cumulative, double beta,
                                    double beta_bar, double alpha) {
  return FtrlHybridSolveDetailed(cumulative, beta, beta_bar, alpha).point;
}

// Scaled KKT residuals. Both combine |sum(p) - 1| with the spread of the
// per-coordinate implied multipliers, each divided by the magnitude of the
// regularizer gradient at that coordinate.
double TsallisKktResidual(const Vector& cumulative, const Vector& p,
                          double eta, double alpha);
double HybridKktResidual(const Vector& cumulative, const Vector& p,
                         double beta, double beta_bar, double alpha);

}  // namespace psmrlab

#endif  // PSMRLAB_TSALLIS_H_
