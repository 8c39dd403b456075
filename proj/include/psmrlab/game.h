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

#ifndef PSMRLAB_GAME_H_
#define PSMRLAB_GAME_H_

#include <optional>
#include <string>
#include <vector>

#include "psmrlab/linalg.h"
#include "psmrlab/simplex.h"

namespace psmrlab {

inline constexpr double kNormTolerance = 1e-9;

// A finite set of action vectors in R^d with norm at most one that spans
// R^d.
class ActionSet {
 public:
  ActionSet() = default;
  explicit ActionSet(std::vector<Vector> vectors,
                     std::vector<std::string> labels = {});

  static ActionSet StandardBasis(int dim, std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(vectors_.size()); }
  int dim() const { return dim_; }
  const Vector& operator[](int i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Columns are the action vectors (dim x size).
  Matrix AsColumns() const;

 private:
  std::vector<Vector> vectors_;
  std::vector<std::string> labels_;
  int dim_ = 0;
};

// Rank of the matrix whose columns are `vectors`, via column-pivoted QR.
int SpanRank(const std::vector<Vector>& vectors);

enum class GameType { kNormal, kBilinear };

// Zero-sum game with learner utility u(x, y) = <x, A y>.
class BilinearGame {
 public:
  BilinearGame() = default;

  // X and Y are standard bases and A is the utility matrix; every entry
  // must lie in [-1, 1].
  static BilinearGame NormalForm(Matrix utility,
                                 std::vector<std::string> labels_x = {},
                                 std::vector<std::string> labels_y = {});
  // Requires spectral norm of A at most 1 (within kNormTolerance).
  static BilinearGame Bilinear(Matrix a, ActionSet x, ActionSet y);

  GameType type() const { return type_; }
  const Matrix& a() const { return a_; }
  const ActionSet& x() const { return x_; }
  const ActionSet& y() const { return y_; }
  int num_x() const { return x_.size(); }
  int num_y() const { return y_.size(); }
  // Precomputed u(x_i, y_j) for every pair (num_x by num_y).
  const Matrix& utilities() const { return utilities_; }

 private:
  void Finish();

  GameType type_ = GameType::kNormal;
  Matrix a_;
  ActionSet x_;
  ActionSet y_;
  Matrix utilities_;
};

// <x, A y> for action indices; throws InvalidArgumentError out of range.
double Utility(const BilinearGame& game, int x, int y);

struct PureMaximinResult {
  int index;
  double value;
};

// argmax_x min_y u(x, y); lowest index wins ties.
PureMaximinResult PureMaximin(const BilinearGame& game);
// argmin_y max_x u(x, y); lowest index wins ties.
PureMaximinResult PureMinimax(const BilinearGame& game);

struct PsnePair {
  int x;
  int y;
  bool strict;
};

// Every saddle point of the utility matrix, in row-major order.
std::vector<PsnePair> FindPsne(const BilinearGame& game);
std::vector<PsnePair> FindPsne(const Matrix& utilities);

struct NashValue {
  double v_mix;
  SimplexPoint p_star;
  SimplexPoint q_star;
};

// Mixed equilibrium by linear programming over the utility matrix.
NashValue ComputeNashValue(const BilinearGame& game);

// Indifference-condition equilibrium of ((a, b), (c, d)). Throws
// InvalidArgumentError when the matrix has a saddle point.
NashValue Nash2x2ClosedForm(double a, double b, double c, double d);

// min{|a-b|, |a-c|, |b-d|, |c-d|}.
double DeltaEntry2x2(double a, double b, double c, double d);

struct EquilibriumReport {
  std::vector<PsnePair> psne;
  double v_star = 0.0;
  int maximin_row = 0;
  int minimax_col = 0;
  double v_mix = 0.0;
  SimplexPoint p_star;
  SimplexPoint q_star;

  bool has_psne() const { return !psne.empty(); }
  bool has_strict_psne() const;
};

EquilibriumReport Analyze(const BilinearGame& game);

struct GapProfile {
  // The (maximin row, minimax column) anchor; set only when a PSNE exists.
  std::optional<PsnePair> anchor;
  Vector delta_r;  // over x; empty without a PSNE
  Vector delta_c;  // over y; empty without a PSNE
  std::optional<double> delta_r_min;
  std::optional<double> delta_c_min;
  double delta_mix = 0.0;
  Matrix delta_xy;
  // Smallest positive v* - u(x, y); +infinity when no pair has a positive gap.
  double delta_lin = 0.0;
  std::optional<double> delta_entry;  // 2x2 games only
};

GapProfile ComputeGapProfile(const BilinearGame& game,
                             const EquilibriumReport& report);
inline GapProfile ComputeGapProfile(const BilinearGame& game) {
  return ComputeGapProfile(game, Analyze(game));
}

}  // namespace psmrlab

#endif  // PSMRLAB_GAME_H_
