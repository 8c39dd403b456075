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

#ifndef PSMRLAB_LP_H_
#define PSMRLAB_LP_H_

#include "psmrlab/linalg.h"
#include "psmrlab/simplex.h"

namespace psmrlab {

struct MinimaxSolution {
  // Value of the game for the row (maximizing) player.
  double value = 0.0;
  SimplexPoint row_strategy;
  SimplexPoint col_strategy;
  // max_i (M q)_i - min_j (p^T M)_j at the returned strategies.
  double duality_gap = 0.0;
  int pivots = 0;
};

// Solves max_p min_q p^T M q with a dense tableau simplex method.
//
// After shifting M so every entry is at least one, the column player's
// program max 1^T y s.t. M y <= 1, y >= 0 is solved from the all-slack
// basis; the row player's strategy is read from the final reduced costs of
// the slack columns. Pivoting follows Dantzig's rule and switches to
// Bland's rule after 10 * (rows + cols) pivots. Throws NumericalError if
// the pivot budget is exhausted or the duality gap exceeds 1e-9.
MinimaxSolution LpMinimax(const Matrix& payoff);

}  // namespace psmrlab

#endif  // PSMRLAB_LP_H_
