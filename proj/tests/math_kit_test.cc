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
#include "psmrlab/error.h"
#include "psmrlab/lemmas.h"
#include "psmrlab/lp.h"
#include "psmrlab/psd.h"
#include "psmrlab/rng.h"
#include "psmrlab/simplex.h"
#include "psmrlab/tsallis.h"

namespace psmrlab {
namespace {

using testing::Phi;

Vector Vec(std::initializer_list<double> v) {
  Vector out(v.size());
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

TEST_SUITE("math-kit") {

TEST_CASE("rng streams are reproducible and distinct") {
  Rng a(42, Stream::kLearner), b(42, Stream::kLearner), c(42, Stream::kNoise);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.NextU64();
    CHECK(x == b.NextU64());
    differs |= x != c.NextU64();
  }
  CHECK(differs);
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.Uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("categorical sampling frequencies") {
  Rng rng(3, Stream::kAux);
  std::vector<double> q = {0.9, 0.1};
  int ones = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) ones += rng.Categorical(q);
  CHECK(std::abs(ones / static_cast<double>(n) - 0.1) < 0.01);
  std::vector<double> point = {0.0, 1.0, 0.0};
  for (int i = 0; i < 100; ++i) CHECK(rng.Categorical(point) == 1);
}

TEST_CASE("simplex point validation") {
  CHECK_NOTHROW(SimplexPoint(Vec({0.25, 0.75})));
  CHECK_THROWS_AS(SimplexPoint(Vec({0.5, 0.6})), ValidationError);
  CHECK_THROWS_AS(SimplexPoint(Vec({1.5, -0.5})), ValidationError);
  CHECK(SimplexPoint::Uniform(4)[2] == doctest::Approx(0.25));
  CHECK(SimplexPoint::PointMass(3, 1)[1] == 1.0);
  CHECK_THROWS(SimplexPoint::PointMass(3, 3));
}

TEST_CASE("tsallis potential examples") {
  CHECK(TsallisPotential(SimplexPoint::Uniform(2), 0.5) ==
        doctest::Approx(0.828427).epsilon(1e-6));
  for (double a : {0.1, 0.5, 0.9}) {
    CHECK(TsallisPotential(SimplexPoint::PointMass(3, 0), a) == 0.0);
  }
  CHECK(TsallisPotential(SimplexPoint::Uniform(4), 0.5) ==
        doctest::Approx(2.0).epsilon(1e-12));
  for (int m : {2, 9, 16}) {
    CHECK(TsallisPotential(SimplexPoint::Uniform(m), 0.5) ==
          doctest::Approx(2.0 * (std::sqrt(m) - 1.0)));
  }
  CHECK_THROWS_AS(TsallisPotential(SimplexPoint::Uniform(2), 1.0),
                  InvalidArgumentError);
  CHECK_THROWS_AS(TsallisPotential(SimplexPoint::Uniform(2), 0.0),
                  InvalidArgumentError);
}

TEST_CASE("tsallis ftrl: zero rewards give uniform") {
  for (int m : {1, 2, 5, 32}) {
    SimplexPoint p = FtrlTsallisSolve(Vector::Zero(m), 0.3, 0.5);
    for (int i = 0; i < m; ++i) CHECK(p[i] == doctest::Approx(1.0 / m));
  }
}

TEST_CASE("tsallis ftrl matches the grid oracle on two actions") {
  const Vector l = Vec({1.0, 0.0});
  const double eta = 0.5, alpha = 0.5;
  auto objective = [&](const Vector& p) {
    return p.dot(l) + Phi(p, alpha) / eta;
  };
  Vector grid = testing::GridArgmax2(objective, 1e-5);
  SimplexPoint p = FtrlTsallisSolve(l, eta, alpha);
  CHECK(std::abs(p[0] - grid[0]) < 1e-4);
}

TEST_CASE("tsallis ftrl dominance limit") {
  Vector l = Vec({0.0, 1e6, 0.0, 0.0});
  SimplexPoint p = FtrlTsallisSolve(l, 0.5, 0.5);
  CHECK(p[1] >= 1.0 - 1e-6);
  // Moderate gap, checked against the grid oracle.
  Vector l2 = Vec({0.0, 20.0});
  auto objective = [&](const Vector& q) {
    return q.dot(l2) + Phi(q, 0.5) / 0.5;
  };
  Vector grid = testing::GridArgmax2(objective, 1e-6);
  CHECK(std::abs(FtrlTsallisSolve(l2, 0.5, 0.5)[1] - grid[1]) < 1e-5);
}

TEST_CASE("tsallis ftrl KKT residual on random inputs") {
  Rng rng(11, Stream::kAux);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = 1 + static_cast<int>(rng.Uniform() * 32);
    Vector l(m);
    for (int i = 0; i < m; ++i) l[i] = 2000.0 * rng.Uniform() - 1000.0;
    const double eta = std::exp(-6.0 + 8.0 * rng.Uniform());
    const double alpha = 0.05 + 0.9 * rng.Uniform();
    SimplexPoint p = FtrlTsallisSolve(l, eta, alpha);
    CHECK(IsDistribution(p.weights()));
    worst = std::max(worst, TsallisKktResidual(l, p.weights(), eta, alpha));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("tsallis ftrl monotone in own reward and shift invariant") {
  Rng rng(12, Stream::kAux);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + static_cast<int>(rng.Uniform() * 8);
    Vector l(m);
    for (int i = 0; i < m; ++i) l[i] = 20.0 * rng.Uniform() - 10.0;
    const int k = static_cast<int>(rng.Uniform() * m);
    const double eta = 0.1 + rng.Uniform();
    Vector bumped = l;
    bumped[k] += 0.01 + rng.Uniform();
    CHECK(FtrlTsallisSolve(bumped, eta, 0.5)[k] >=
          FtrlTsallisSolve(l, eta, 0.5)[k]);
    Vector shifted = l.array() + (100.0 * rng.Uniform() - 50.0);
    CHECK((FtrlTsallisSolve(shifted, eta, 0.5).weights() -
           FtrlTsallisSolve(l, eta, 0.5).weights())
              .cwiseAbs()
              .maxCoeff() < 1e-9);
  }
}

TEST_CASE("tsallis ftrl warm start gives the same answer") {
  Vector l = Vec({3.0, -1.0, 0.5});
  FtrlSolution cold = FtrlTsallisSolveDetailed(l, 0.4, 0.5);
  FtrlSolution warm =
      FtrlTsallisSolveDetailed(l, 0.4, 0.5, cold.multiplier_offset + 0.3);
  CHECK((cold.point.weights() - warm.point.weights()).norm() < 1e-12);
  CHECK_THROWS_AS(FtrlTsallisSolve(l, 0.0, 0.5), InvalidArgumentError);
  l[1] = std::nan("");
  CHECK_THROWS_AS(FtrlTsallisSolve(l, 0.4, 0.5), InvalidArgumentError);
}

TEST_CASE("hybrid ftrl reduces to tsallis when beta_bar is zero") {
  Rng rng(13, Stream::kAux);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng.Uniform() * 10);
    Vector l(m);
    for (int i = 0; i < m; ++i) l[i] = 10.0 * rng.Uniform() - 5.0;
    const double beta = 0.2 + 5.0 * rng.Uniform();
    const double alpha = 0.2 + 0.7 * rng.Uniform();
    SimplexPoint h = FtrlHybridSolve(l, beta, 0.0, alpha);
    SimplexPoint t = FtrlTsallisSolve(l, 1.0 / beta, alpha);
    CHECK((h.weights() - t.weights()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("hybrid ftrl: zero rewards give uniform") {
  SimplexPoint p = FtrlHybridSolve(Vector::Zero(6), 2.0, 1.0, 0.75);
  for (int i = 0; i < 6; ++i) CHECK(p[i] == doctest::Approx(1.0 / 6));
}

TEST_CASE("hybrid ftrl matches the grid oracle on three actions") {
  const Vector l = Vec({0.5, 0.0, -0.5});
  const double alpha = 0.75, beta = 2.0, beta_bar = 1.0;
  auto objective = [&](const Vector& p) {
    return p.dot(l) + beta * Phi(p, alpha) + beta_bar * Phi(p, 1.0 - alpha);
  };
  Vector grid = testing::GridArgmax3(objective, 1e-4);
  SimplexPoint p = FtrlHybridSolve(l, beta, beta_bar, alpha);
  CHECK((p.weights() - grid).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("hybrid ftrl KKT residual on random inputs") {
  Rng rng(14, Stream::kAux);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int m = 1 + static_cast<int>(rng.Uniform() * 32);
    Vector l(m);
    for (int i = 0; i < m; ++i) l[i] = 2000.0 * rng.Uniform() - 1000.0;
    const double beta = std::exp(-3.0 + 8.0 * rng.Uniform());
    const double beta_bar = rng.Uniform() < 0.1 ? 0.0 : std::exp(-3.0 + 8.0 * rng.Uniform());
    const double alpha = 0.55 + 0.4 * rng.Uniform();
    SimplexPoint p = FtrlHybridSolve(l, beta, beta_bar, alpha);
    CHECK(IsDistribution(p.weights()));
    worst = std::max(worst, HybridKktResidual(l, p.weights(), beta, beta_bar, alpha));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("hybrid ftrl monotone in own reward") {
  Rng rng(15, Stream::kAux);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + static_cast<int>(rng.Uniform() * 6);
    Vector l(m);
    for (int i = 0; i < m; ++i) l[i] = 20.0 * rng.Uniform() - 10.0;
    const int k = static_cast<int>(rng.Uniform() * m);
    Vector bumped = l;
    bumped[k] += 0.01 + rng.Uniform();
    CHECK(FtrlHybridSolve(bumped, 1.5, 0.7, 0.8)[k] >=
          FtrlHybridSolve(l, 1.5, 0.7, 0.8)[k] - 1e-12);
  }
}

TEST_CASE("two-point KL examples and bounds") {
  CHECK(KlTwoPoint(0.0, 0.0) == 0.0);
  CHECK(KlTwoPoint(0.5, 0.0) == doctest::Approx(0.130812).epsilon(1e-6));
  for (int i = 0; i < 200; ++i) {
    for (int j = 0; j < 200; ++j) {
      const double a = -0.5 + i / 199.0;
      const double b = -0.5 + j / 199.0;
      const double kl = KlTwoPoint(a, b);
      CHECK(kl >= 0.0);
      CHECK(kl <= (a - b) * (a - b) + 1e-15);
      if (i != j) CHECK(kl > 0.0);
    }
  }
  CHECK(KlTwoPoint(0.3, 0.3) <= 1e-12);
  CHECK_THROWS_AS(KlTwoPoint(1.0, 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(KlTwoPoint(0.0, -1.0), InvalidArgumentError);
}

TEST_CASE("sqrt function maximum") {
  auto check = [](double a, double b, double x, double f) {
    SqrtFuncMax r = SqrtFunctionMax(a, b);
    CHECK(r.x_star == doctest::Approx(x));
    CHECK(r.f_star == doctest::Approx(f));
    // Dense scan of sqrt(a x) - b x.
    double best = -1e300;
    for (int i = 0; i <= 200000; ++i) {
      const double t = 4.0 * x * i / 200000.0;
      best = std::max(best, std::sqrt(a * t) - b * t);
    }
    CHECK(best == doctest::Approx(f).epsilon(1e-6));
  };
  check(4, 1, 1, 1);
  check(16, 2, 1, 2);
  check(1, 0.5, 1, 0.5);
  CHECK_THROWS_AS(SqrtFunctionMax(0.0, 1.0), InvalidArgumentError);
  CHECK_THROWS_AS(SqrtFunctionMax(1.0, -1.0), InvalidArgumentError);
}

TEST_CASE("self-bounding inequality") {
  CHECK(SelfBoundUpper(0, 0, 0) == 0.0);
  CHECK(SelfBoundUpper(1, 4, 1) == doctest::Approx(5.0));
  CHECK(SelfBoundUpper(2, 0, 0) == doctest::Approx(2.0));
  // Largest root of x = sqrt(a x + b) + c, found by bisection.
  Rng rng(16, Stream::kAux);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = 5 * rng.Uniform(), b = 5 * rng.Uniform(), c = 5 * rng.Uniform();
    double lo = 0.0, hi = 1e3;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (mid <= std::sqrt(a * mid + b) + c ? lo : hi) = mid;
    }
    CHECK(lo <= SelfBoundUpper(a, b, c) + 1e-9);
  }
  // x = sqrt(x + 4) + 1 has root (3 + sqrt(21)) / 2.
  CHECK((3.0 + std::sqrt(21.0)) / 2.0 <= SelfBoundUpper(1, 4, 1));
  CHECK_THROWS_AS(SelfBoundUpper(-1, 0, 0), InvalidArgumentError);
}

TEST_CASE("lp minimax examples") {
  Matrix mp(2, 2);
  mp << 1, -1, -1, 1;
  MinimaxSolution s = LpMinimax(mp);
  CHECK(std::abs(s.value) < 1e-12);
  CHECK(s.row_strategy[0] == doctest::Approx(0.5));
  CHECK(s.col_strategy[0] == doctest::Approx(0.5));

  Matrix m(2, 2);
  m << 0, 2, 1, 0;
  s = LpMinimax(m);
  CHECK(s.value == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(s.row_strategy[0] == doctest::Approx(1.0 / 3.0));
  CHECK(s.row_strategy[1] == doctest::Approx(2.0 / 3.0));
  CHECK(s.col_strategy[0] == doctest::Approx(2.0 / 3.0));
  CHECK(s.col_strategy[1] == doctest::Approx(1.0 / 3.0));

  Matrix saddle(2, 3);
  saddle << 3, 1, 4, 0, -1, 2;
  CHECK(LpMinimax(saddle).value == doctest::Approx(testing::EnumMaximin(saddle)));
  CHECK_THROWS_AS(LpMinimax(Matrix(0, 0)), InvalidArgumentError);
}

TEST_CASE("lp minimax duality and optimality on random games") {
  Rng rng(17, Stream::kAux);
  for (int trial = 0; trial < 2000; ++trial) {
    const int r = 1 + static_cast<int>(rng.Uniform() * 6);
    const int c = 1 + static_cast<int>(rng.Uniform() * 6);
    Matrix m = testing::RandomMatrix(rng, r, c);
    MinimaxSolution s = LpMinimax(m);
    CHECK(s.duality_gap <= 1e-9);
    const Vector rowpay = (s.row_strategy.weights().transpose() * m).transpose();
    const Vector colpay = m * s.col_strategy.weights();
    CHECK(rowpay.minCoeff() >= s.value - 1e-9);
    CHECK(colpay.maxCoeff() <= s.value + 1e-9);
    CHECK(LpMinimax(-m.transpose()).value == doctest::Approx(-s.value).epsilon(1e-9));
    if (r == 2 && c == 2) {
      CHECK(std::abs(s.value - testing::ScanValue2x2(m)) < 1e-9);
    }
  }
}

TEST_CASE("lp minimax survives degenerate matrices") {
  Matrix zero = Matrix::Zero(4, 5);
  CHECK(LpMinimax(zero).value == 0.0);
  Matrix rep(3, 3);
  rep << 1, 1, 0, 1, 1, 0, 0, 0, 1;
  CHECK(LpMinimax(rep).value == doctest::Approx(0.5));
  // Integer matrices with many ties.
  Rng rng(18, Stream::kAux);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix m(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) m(i, j) = std::floor(3 * rng.Uniform()) - 1;
    CHECK(LpMinimax(m).duality_gap <= 1e-9);
  }
}

TEST_CASE("psd state examples") {
  PsdState s = PsdInit(1.0, 2);
  CHECK(WeightedNorm(s, Vec({1, 0})) == doctest::Approx(1.0));
  PsdState t = PsdUpdate(s, Vec({1, 0}), 0.0);
  CHECK(WeightedNorm(t, Vec({1, 0})) == doctest::Approx(std::sqrt(0.5)));
  // Copy-on-update leaves the input untouched.
  CHECK(WeightedNorm(s, Vec({1, 0})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(PsdUpdate(s, Vec({1, 0, 0}), 0.0), InvalidArgumentError);
  CHECK_THROWS_AS(WeightedNorm(s, Vec({1})), InvalidArgumentError);
  CHECK_THROWS_AS(PsdInit(0.0, 2), InvalidArgumentError);
}

TEST_CASE("psd incremental inverse and log-determinant") {
  Rng rng(19, Stream::kAux);
  const int d = 6;
  PsdState s = PsdInit(1.0, d);
  Matrix v = Matrix::Identity(d, d);
  Vector b = Vector::Zero(d);
  for (int k = 1; k <= 10000; ++k) {
    Vector a = testing::RandomUnitVector(rng, d) * rng.Uniform();
    const double r = 2 * rng.Uniform() - 1;
    PsdUpdateInPlace(s, a, r);
    v += a * a.transpose();
    b += r * a;
    if (k == 1000) {
      CHECK((s.v_inv - v.inverse()).norm() <= 1e-8);
      CHECK((s.v * s.v_inv - Matrix::Identity(d, d)).norm() <= 1e-8);
    }
    if (k % 2500 == 0) {
      CHECK(std::abs(s.logdet - testing::DirectLogDet(v)) <= 1e-7);
    }
  }
  CHECK((s.v * s.v_inv - Matrix::Identity(d, d)).norm() <= 1e-8);
  CHECK((RidgeEstimate(s) - v.ldlt().solve(b)).norm() <= 1e-8);
}

}  // TEST_SUITE

}  // namespace
}  // namespace psmrlab
