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

#include "psmrlab/game.h"

#include <cmath>
#include <limits>
#include <string>

#include "psmrlab/error.h"
#include "psmrlab/lp.h"

namespace psmrlab {

int SpanRank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  Matrix cols(vectors.front().size(), vectors.size());
  for (size_t j = 0; j < vectors.size(); ++j) cols.col(j) = vectors[j];
  Eigen::ColPivHouseholderQR<Matrix> qr(cols);
  qr.setThreshold(1e-10);
  return static_cast<int>(qr.rank());
}

ActionSet::ActionSet(std::vector<Vector> vectors,
                     std::vector<std::string> labels)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
  if (vectors_.empty()) throw ValidationError("action set is empty");
  dim_ = static_cast<int>(vectors_.front().size());
  if (dim_ == 0) throw ValidationError("action vectors have dimension 0");
  for (size_t i = 0; i < vectors_.size(); ++i) {
    const Vector& v = vectors_[i];
    if (v.size() != dim_) {
      throw ValidationError("action " + std::to_string(i) +
                            " has mismatched dimension");
    }
    if (!v.allFinite()) {
      throw ValidationError("action " + std::to_string(i) + " is not finite");
    }
    if (v.norm() > 1.0 + kNormTolerance) {
      throw ValidationError("action " + std::to_string(i) +
                            " has Euclidean norm above 1");
    }
  }
  if (!labels_.empty() && labels_.size() != vectors_.size()) {
    throw ValidationError("label count does not match action count");
  }
  if (SpanRank(vectors_) < dim_) {
    throw ValidationError("action set does not span R^" +
                          std::to_string(dim_));
  }
}

ActionSet ActionSet::StandardBasis(int dim, std::vector<std::string> labels) {
  std::vector<Vector> basis;
  basis.reserve(dim);
  for (int i = 0; i < dim; ++i) basis.push_back(Vector::Unit(dim, i));
  return ActionSet(std::move(basis), std::move(labels));
}

Matrix ActionSet::AsColumns() const {
  Matrix out(dim_, size());
  for (int j = 0; j < size(); ++j) out.col(j) = vectors_[j];
  return out;
}

BilinearGame BilinearGame::NormalForm(Matrix utility,
                                      std::vector<std::string> labels_x,
                                      std::vector<std::string> labels_y) {
  if (utility.rows() == 0 || utility.cols() == 0) {
    throw ValidationError("utility matrix is empty");
  }
  if (!utility.allFinite()) throw ValidationError("utility is not finite");
  if (utility.cwiseAbs().maxCoeff() > 1.0 + kNormTolerance) {
    throw ValidationError("utility entries must lie in [-1, 1]");
  }
  BilinearGame g;
  g.type_ = GameType::kNormal;
  g.x_ = ActionSet::StandardBasis(static_cast<int>(utility.rows()),
                                  std::move(labels_x));
  g.y_ = ActionSet::StandardBasis(static_cast<int>(utility.cols()),
                                  std::move(labels_y));
  g.a_ = std::move(utility);
  g.Finish();
  return g;
}

BilinearGame BilinearGame::Bilinear(Matrix a, ActionSet x, ActionSet y) {
  if (a.rows() != x.dim() || a.cols() != y.dim()) {
    throw ValidationError("matrix shape does not match action dimensions");
  }
  if (!a.allFinite()) throw ValidationError("matrix is not finite");
  Eigen::JacobiSVD<Matrix> svd(a);
  const double spectral = svd.singularValues()(0);
  if (spectral > 1.0 + kNormTolerance) {
    throw ValidationError("spectral norm of A is " + std::to_string(spectral) +
                          ", must be at most 1");
  }
  BilinearGame g;
  g.type_ = GameType::kBilinear;
  g.a_ = std::move(a);
  g.x_ = std::move(x);
  g.y_ = std::move(y);
  g.Finish();
  return g;
}

void BilinearGame::Finish() {
  if (type_ == GameType::kNormal) {
    utilities_ = a_;
  } else {
    utilities_ = x_.AsColumns().transpose() * a_ * y_.AsColumns();
  }
}

double Utility(const BilinearGame& game, int x, int y) {
  if (x < 0 || x >= game.num_x() || y < 0 || y >= game.num_y()) {
    throw InvalidArgumentError("action index out of range");
  }
  return game.utilities()(x, y);
}

PureMaximinResult PureMaximin(const BilinearGame& game) {
  const Matrix& u = game.utilities();
  PureMaximinResult best{0, -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < u.rows(); ++i) {
    const double worst = u.row(i).minCoeff();
    if (worst > best.value) best = {i, worst};
  }
  return best;
}

PureMaximinResult PureMinimax(const BilinearGame& game) {
  const Matrix& u = game.utilities();
  PureMaximinResult best{0, std::numeric_limits<double>::infinity()};
  for (int j = 0; j < u.cols(); ++j) {
    const double worst = u.col(j).maxCoeff();
    if (worst < best.value) best = {j, worst};
  }
  return best;
}

std::vector<PsnePair> FindPsne(const Matrix& u) {
  std::vector<PsnePair> out;
  for (int i = 0; i < u.rows(); ++i) {
    for (int j = 0; j < u.cols(); ++j) {
      const double v = u(i, j);
      bool saddle = true;
      bool strict = true;
      for (int k = 0; k < u.rows() && saddle; ++k) {
        if (k == i) continue;
        if (u(k, j) > v) saddle = false;
        if (u(k, j) >= v) strict = false;
      }
      for (int l = 0; l < u.cols() && saddle; ++l) {
        if (l == j) continue;
        if (u(i, l) < v) saddle = false;
        if (u(i, l) <= v) strict = false;
      }
      if (saddle) out.push_back({i, j, strict});
    }
  }
  return out;
}

std::vector<PsnePair> FindPsne(const BilinearGame& game) {
  return FindPsne(game.utilities());
}

NashValue ComputeNashValue(const BilinearGame& game) {
  MinimaxSolution sol = LpMinimax(game.utilities());
  return {sol.value, std::move(sol.row_strategy), std::move(sol.col_strategy)};
}

NashValue Nash2x2ClosedForm(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  if (!m.allFinite()) throw InvalidArgumentError("non-finite entries");
  if (!FindPsne(m).empty()) {
    throw InvalidArgumentError(
        "matrix has a pure equilibrium; closed form does not apply");
  }
  const double denom = a - b - c + d;
  if (denom == 0.0) throw InvalidArgumentError("degenerate 2x2 matrix");
  Vector p(2), q(2);
  p << (d - c) / denom, (a - b) / denom;
  q << (d - b) / denom, (a - c) / denom;
  return {(a * d - b * c) / denom, SimplexPoint(std::move(p), 1e-9),
          SimplexPoint(std::move(q), 1e-9)};
}

double DeltaEntry2x2(double a, double b, double c, double d) {
  return std::min({std::abs(a - b), std::abs(a - c), std::abs(b - d),
                   std::abs(c - d)});
}

bool EquilibriumReport::has_strict_psne() const {
  for (const PsnePair& e : psne) {
    if (e.strict) return true;
  }
  return false;
}

EquilibriumReport Analyze(const BilinearGame& game) {
  EquilibriumReport r;
  r.psne = FindPsne(game);
  const PureMaximinResult maximin = PureMaximin(game);
  r.v_star = maximin.value;
  r.maximin_row = maximin.index;
  r.minimax_col = PureMinimax(game).index;
  NashValue nash = ComputeNashValue(game);
  if (r.has_psne()) {
    // Saddle point: the maximin row and minimax column form an equilibrium.
    if (std::abs(nash.v_mix - r.v_star) > 1e-9) {
      throw NumericalError("LP value disagrees with saddle value");
    }
    r.v_mix = r.v_star;
    r.p_star = SimplexPoint::PointMass(game.num_x(), r.maximin_row);
    r.q_star = SimplexPoint::PointMass(game.num_y(), r.minimax_col);
  } else {
    r.v_mix = nash.v_mix;
    r.p_star = std::move(nash.p_star);
    r.q_star = std::move(nash.q_star);
  }
  return r;
}

GapProfile ComputeGapProfile(const BilinearGame& game,
                             const EquilibriumReport& report) {
  const Matrix& u = game.utilities();
  const double inf = std::numeric_limits<double>::infinity();
  GapProfile g;
  g.delta_mix = report.v_mix - report.v_star;
  g.delta_xy = (report.v_star - u.array()).matrix();
  g.delta_lin = inf;
  for (int i = 0; i < u.rows(); ++i) {
    for (int j = 0; j < u.cols(); ++j) {
      const double d = g.delta_xy(i, j);
      if (d > 0.0 && d < g.delta_lin) g.delta_lin = d;
    }
  }
  if (report.has_psne()) {
    const int xs = report.maximin_row;
    const int ys = report.minimax_col;
    const double value = u(xs, ys);
    g.anchor = PsnePair{xs, ys, false};
    for (const PsnePair& e : report.psne) {
      if (e.x == xs && e.y == ys) g.anchor->strict = e.strict;
    }
    g.delta_r = (value - u.col(ys).array()).matrix();
    g.delta_c = (u.row(xs).array() - value).matrix().transpose();
    double rmin = inf, cmin = inf;
    for (int i = 0; i < u.rows(); ++i) {
      if (i != xs) rmin = std::min(rmin, g.delta_r[i]);
    }
    for (int j = 0; j < u.cols(); ++j) {
      if (j != ys) cmin = std::min(cmin, g.delta_c[j]);
    }
    g.delta_r_min = rmin;
    g.delta_c_min = cmin;
  }
  if (u.rows() == 2 && u.cols() == 2) {
    g.delta_entry = DeltaEntry2x2(u(0, 0), u(0, 1), u(1, 0), u(1, 1));
  }
  return g;
}

}  // namespace psmrlab
