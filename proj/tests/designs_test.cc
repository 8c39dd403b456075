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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "psmrlab/design.h"
#include "psmrlab/error.h"

namespace psmrlab {
namespace {

ActionSet RandomUnitSet(Rng& rng, int m, int d) {
  std::vector<Vector> v;
  for (int i = 0; i < m; ++i) v.push_back(testing::RandomUnitVector(rng, d));
  return ActionSet(std::move(v));
}

TEST_SUITE("designs") {

TEST_CASE("variance matrix examples") {
  for (int d : {1, 3, 5}) {
    Matrix s = VarianceMatrix(SimplexPoint::Uniform(d), ActionSet::StandardBasis(d));
    CHECK((s - Matrix::Identity(d, d) / d).norm() < 1e-15);
  }
  // (1, 1) breaks the unit-norm bound, so the set uses (1, 1) / sqrt 2.
  Vector a(2);
  a << 1, 0;
  ActionSet x({a, Vector(Vector::Constant(2, 1.0 / std::sqrt(2.0)))});
  Vector w(2);
  w << 0.5, 0.5;
  Matrix s = VarianceMatrix(SimplexPoint(w), x);
  Matrix expect(2, 2);
  expect << 0.5 + 0.25, 0.25, 0.25, 0.25;
  CHECK((s - expect).norm() < 1e-15);
  // Point mass: rank one, so inversion fails.
  Matrix pm = VarianceMatrix(SimplexPoint::PointMass(2, 0), x);
  CHECK(pm(0, 0) == 1.0);
  CHECK_THROWS_AS(InvertVarianceMatrix(pm), NumericalError);
  CHECK_THROWS_AS(VarianceMatrix(SimplexPoint::Uniform(3), x), InvalidArgumentError);
}

TEST_CASE("variance matrix hand value on the unscaled pair") {
  // The formula does not care about the norm bound, so check the textbook
  // pair {(1,0), (1,1)} directly.
  Vector a(2), b(2);
  a << 1, 0;
  b << 1, 1;
  Matrix s = 0.5 * a * a.transpose() + 0.5 * b * b.transpose();
  Matrix expect(2, 2);
  expect << 1, 0.5, 0.5, 0.5;
  CHECK((s - expect).norm() < 1e-15);
}

TEST_CASE("kw design on the standard basis is uniform") {
  for (int d : {1, 2, 4, 7}) {
    ExplorationDesign e = KieferWolfowitzDesign(ActionSet::StandardBasis(d));
    for (int i = 0; i < d; ++i) CHECK(e.p0[i] == doctest::Approx(1.0 / d));
    CHECK(e.max_leverage == doctest::Approx(d).epsilon(1e-12));
    CHECK(e.c_achieved == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.iterations == 0);
  }
}

TEST_CASE("kw design on a singleton") {
  Vector one(1);
  one << 1.0;
  ExplorationDesign e = KieferWolfowitzDesign(ActionSet({one}));
  CHECK(e.p0[0] == 1.0);
  CHECK(e.max_leverage == doctest::Approx(1.0));
}

TEST_CASE("kw design on random unit vectors") {
  Rng rng(21, Stream::kAux);
  for (int trial = 0; trial < 20; ++trial) {
    ActionSet x = RandomUnitSet(rng, 50, 5);
    std::vector<double> trace;
    ExplorationDesign e = KieferWolfowitzDesign(x, 0.01, kKwMaxIterations, &trace);
    // Independent leverage evaluation at the returned design.
    Matrix s = Matrix::Zero(5, 5);
    for (int i = 0; i < x.size(); ++i) s += e.p0[i] * x[i] * x[i].transpose();
    CHECK((s - e.s).norm() < 1e-12);
    const Matrix s_inv = s.inverse();
    double lev = 0.0;
    for (int i = 0; i < x.size(); ++i) lev = std::max(lev, x[i].dot(s_inv * x[i]));
    CHECK(lev >= 5.0 - 1e-9);
    CHECK(lev <= 5.0 * 1.01 + 1e-9);
    CHECK(e.c_achieved == doctest::Approx(lev / 5.0).epsilon(1e-9));
    // Ascent: log det never decreases.
    for (size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] >= trace[k - 1] - 1e-12);
    CHECK(IsDistribution(e.p0.weights()));
  }
}

TEST_CASE("kw design tighter tolerance and support pruning") {
  Rng rng(22, Stream::kAux);
  ActionSet x = RandomUnitSet(rng, 30, 3);
  ExplorationDesign e = KieferWolfowitzDesign(x, 1e-4);
  CHECK(e.c_achieved <= 1.0 + 1e-4 + 1e-12);
  // Drop near-zero weights: the leverage bound on the remaining actions
  // and the original set still holds.
  std::vector<Vector> kept;
  std::vector<double> w;
  for (int i = 0; i < x.size(); ++i) {
    if (e.p0[i] > 1e-6) {
      kept.push_back(x[i]);
      w.push_back(e.p0[i]);
    }
  }
  Vector wv = Eigen::Map<Vector>(w.data(), w.size());
  wv /= wv.sum();
  ActionSet support(kept);
  Matrix s_inv = InverseVarianceMatrix(SimplexPoint(wv, 1e-9), support);
  CHECK(Leverages(s_inv, x).maxCoeff() <= 3.0 * (1.0 + 1e-4) + 1e-3);
}

TEST_CASE("kw design errors") {
  CHECK_THROWS_AS(KieferWolfowitzDesign(ActionSet::StandardBasis(2), 0.0),
                  InvalidArgumentError);
  Rng rng(23, Stream::kAux);
  ActionSet x = RandomUnitSet(rng, 40, 6);
  CHECK_THROWS_AS(KieferWolfowitzDesign(x, 1e-9, 3), NumericalError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace psmrlab
