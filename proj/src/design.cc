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

#include "psmrlab/design.h"

#include <cmath>
#include <string>

#include "psmrlab/error.h"

namespace psmrlab {

Matrix VarianceMatrix(const SimplexPoint& p, const ActionSet& x) {
  if (p.size() != x.size()) {
    throw InvalidArgumentError("distribution size does not match action set");
  }
  Matrix s = Matrix::Zero(x.dim(), x.dim());
  for (int i = 0; i < x.size(); ++i) {
    if (p[i] > 0.0) s.noalias() += p[i] * x[i] * x[i].transpose();
  }
  return s;
}

Matrix InvertVarianceMatrix(const Matrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
  const Vector& ev = eig.eigenvalues();
  if (!(ev.minCoeff() > 1e-12 * std::max(1.0, ev.maxCoeff()))) {
    throw NumericalError("variance matrix is singular (support does not span)");
  }
  return eig.eigenvectors() * ev.cwiseInverse().asDiagonal() *
         eig.eigenvectors().transpose();
}

Matrix InverseVarianceMatrix(const SimplexPoint& p, const ActionSet& x) {
  return InvertVarianceMatrix(VarianceMatrix(p, x));
}

Vector Leverages(const Matrix& s_inv, const ActionSet& x) {
  Vector out(x.size());
  for (int i = 0; i < x.size(); ++i) out[i] = x[i].dot(s_inv * x[i]);
  return out;
}

ExplorationDesign KieferWolfowitzDesign(const ActionSet& x, double tol,
                                        int max_iterations,
                                        std::vector<double>* logdet_trace) {
  if (!(tol > 0.0)) throw InvalidArgumentError("design tolerance must be > 0");
  const int m = x.size();
  const double d = x.dim();
  Vector p = Vector::Constant(m, 1.0 / m);
  Matrix s = VarianceMatrix(SimplexPoint::FromNormalized(p), x);
  Matrix s_inv = InvertVarianceMatrix(s);
  double logdet = std::log(s.determinant());
  if (logdet_trace) logdet_trace->push_back(logdet);

  int iter = 0;
  Vector lev = Leverages(s_inv, x);
  int k = 0;
  double g = lev.maxCoeff(&k);
  while (g > (1.0 + tol) * d) {
    if (iter >= max_iterations) {
      throw NumericalError("design iteration cap reached with max leverage " +
                           std::to_string(g));
    }
    // Exact line search along the vertex of the largest leverage.
    const double gamma = (g - d) / (d * (g - 1.0));
    const double c = gamma / (1.0 - gamma);
    const Vector sx = s_inv * x[k];
    p *= 1.0 - gamma;
    p[k] += gamma;
    s = (1.0 - gamma) * s + gamma * x[k] * x[k].transpose();
    s_inv = (s_inv - (c / (1.0 + c * g)) * sx * sx.transpose()) /
            (1.0 - gamma);
    logdet += d * std::log(1.0 - gamma) + std::log1p(c * g);
    ++iter;
    if (iter % 1024 == 0) {
      s_inv = InvertVarianceMatrix(s);
      logdet = std::log(s.determinant());
    }
    if (logdet_trace) logdet_trace->push_back(logdet);
    lev = Leverages(s_inv, x);
    g = lev.maxCoeff(&k);
  }

  ExplorationDesign out;
  p /= p.sum();
  out.p0 = SimplexPoint::FromNormalized(std::move(p));
  out.s = VarianceMatrix(out.p0, x);
  out.max_leverage = Leverages(InvertVarianceMatrix(out.s), x).maxCoeff();
  out.c_achieved = out.max_leverage / d;
  out.iterations = iter;
  return out;
}

}  // namespace psmrlab
