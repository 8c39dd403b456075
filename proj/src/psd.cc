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

#include "psmrlab/psd.h"

#include <cmath>
#include <string>

#include "psmrlab/error.h"

namespace psmrlab {
namespace {

void CheckDim(const PsdState& s, const Vector& a) {
  if (a.size() != s.dim()) {
    throw InvalidArgumentError("dimension mismatch: state " +
                               std::to_string(s.dim()) + ", vector " +
                               std::to_string(a.size()));
  }
}

void Refresh(PsdState& s) {
  Eigen::LLT<Matrix> llt(s.v);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("design matrix lost positive definiteness");
  }
  s.v_inv = llt.solve(Matrix::Identity(s.dim(), s.dim()));
  const Matrix& l = llt.matrixLLT();
  double logdet = 0.0;
  for (int i = 0; i < s.dim(); ++i) logdet += 2.0 * std::log(l(i, i));
  s.logdet = logdet;
}

}  // namespace

PsdState PsdInit(double lambda, int dim) {
  if (!(lambda > 0.0)) throw InvalidArgumentError("lambda must be positive");
  if (dim <= 0) throw InvalidArgumentError("dimension must be positive");
  PsdState s;
  s.v = lambda * Matrix::Identity(dim, dim);
  s.v_inv = (1.0 / lambda) * Matrix::Identity(dim, dim);
  s.logdet = dim * std::log(lambda);
  s.b = Vector::Zero(dim);
  return s;
}

void PsdUpdateInPlace(PsdState& s, const Vector& a, double r) {
  CheckDim(s, a);
  // Sherman-Morrison and the matrix determinant lemma.
  const Vector va = s.v_inv * a;
  const double denom = 1.0 + a.dot(va);
  s.v.noalias() += a * a.transpose();
  s.v_inv.noalias() -= (va * va.transpose()) / denom;
  s.logdet += std::log(denom);
  s.b += r * a;
  ++s.updates;
  if (s.updates % PsdState::kRefreshPeriod == 0) Refresh(s);
}

PsdState PsdUpdate(PsdState state, const Vector& a, double r) {
  PsdUpdateInPlace(state, a, r);
  return state;
}

double WeightedNorm(const PsdState& s, const Vector& a) {
  CheckDim(s, a);
  return std::sqrt(std::max(0.0, a.dot(s.v_inv * a)));
}

double DesignNorm(const PsdState& s, const Vector& a) {
  CheckDim(s, a);
  return std::sqrt(std::max(0.0, a.dot(s.v * a)));
}

Vector RidgeEstimate(const PsdState& s) { return s.v_inv * s.b; }

}  // namespace psmrlab
