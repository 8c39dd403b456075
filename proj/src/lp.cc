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

#include "psmrlab/lp.h"

#include <cmath>
#include <limits>
#include <vector>

#include "psmrlab/error.h"

namespace psmrlab {
namespace {

constexpr double kPivotTol = 1e-12;
constexpr double kGapTol = 1e-9;

}  // namespace

MinimaxSolution LpMinimax(const Matrix& payoff) {
  const int rows = static_cast<int>(payoff.rows());
  const int cols = static_cast<int>(payoff.cols());
  if (rows == 0 || cols == 0) throw InvalidArgumentError("empty payoff matrix");
  if (!payoff.allFinite()) throw InvalidArgumentError("non-finite payoff");

  const double shift = 1.0 - payoff.minCoeff();
  const Matrix shifted = payoff.array() + shift;

  // Tableau: `rows` constraint rows plus the objective row; columns are
  // the `cols` structural variables, `rows` slacks and the right-hand side.
  const int width = cols + rows + 1;
  const int rhs = width - 1;
  Matrix tab = Matrix::Zero(rows + 1, width);
  tab.topLeftCorner(rows, cols) = shifted;
  tab.block(0, cols, rows, rows).setIdentity();
  tab.col(rhs).head(rows).setOnes();
  tab.row(rows).head(cols).setConstant(-1.0);
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) basis[i] = cols + i;

  const int bland_after = 10 * (rows + cols);
  const int pivot_cap = bland_after + 50 * (rows + cols) + 1000;
  int pivots = 0;
  for (;; ++pivots) {
    if (pivots >= pivot_cap) {
      throw NumericalError("simplex pivot budget exhausted (cycling)");
    }
    const bool bland = pivots >= bland_after;
    int enter = -1;
    double best = -kPivotTol;
    for (int j = 0; j < rhs; ++j) {
      const double rc = tab(rows, j);
      if (rc < best) {
        enter = j;
        if (bland) break;
        best = rc;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      const double a = tab(i, enter);
      if (a <= kPivotTol) continue;
      const double r = tab(i, rhs) / a;
      if (r < ratio - 1e-15 ||
          (bland && std::abs(r - ratio) <= 1e-15 && basis[i] < basis[leave])) {
        ratio = r;
        leave = i;
      }
    }
    // Unbounded is impossible for a strictly positive matrix.
    if (leave < 0) throw NumericalError("simplex ratio test found no row");

    tab.row(leave) /= tab(leave, enter);
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const double factor = tab(i, enter);
      if (factor != 0.0) tab.row(i) -= factor * tab.row(leave);
    }
    basis[leave] = enter;
  }

  Vector y = Vector::Zero(cols);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) y[basis[i]] = tab(i, rhs);
  }
  Vector x(rows);
  for (int i = 0; i < rows; ++i) x[i] = std::max(0.0, tab(rows, cols + i));
  y = y.cwiseMax(0.0);
  const double ysum = y.sum();
  const double xsum = x.sum();
  if (!(ysum > 0.0) || !(xsum > 0.0)) {
    throw NumericalError("degenerate simplex solution");
  }
  Vector q = y / ysum;
  Vector p = x / xsum;

  const double lower = (p.transpose() * payoff).minCoeff();
  const double upper = (payoff * q).maxCoeff();
  MinimaxSolution sol;
  sol.value = 0.5 * (lower + upper);
  sol.row_strategy = SimplexPoint::FromNormalized(std::move(p));
  sol.col_strategy = SimplexPoint::FromNormalized(std::move(q));
  sol.duality_gap = upper - lower;
  sol.pivots = pivots;
  if (std::abs(sol.duality_gap) > kGapTol) {
    throw NumericalError("minimax duality gap " +
                         std::to_string(sol.duality_gap) + " exceeds 1e-9");
  }
  return sol;
}

}  // namespace psmrlab
