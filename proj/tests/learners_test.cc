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
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "psmrlab/error.h"
#include "psmrlab/learners.h"
#include "psmrlab/tsallis.h"

namespace psmrlab {
namespace {

Vector V(std::initializer_list<double> v) {
  Vector out(v.size());
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

TEST_SUITE("learners") {

TEST_CASE("tsallis-inf first rounds") {
  TsallisInf learner(3);
  Rng rng(1, Stream::kLearner);
  const int a = learner.Choose(rng);
  for (int i = 0; i < 3; ++i) {
    CHECK((*learner.LastDistribution())[i] == doctest::Approx(1.0 / 3));
  }
  // r = 1 makes the estimator all ones, so round 2 is uniform again.
  learner.Update(a, Feedback::Uninformed(1.0));
  CHECK((learner.cumulative().array() == 1.0).all());
  learner.Choose(rng);
  for (int i = 0; i < 3; ++i) {
    CHECK((*learner.LastDistribution())[i] == doctest::Approx(1.0 / 3));
  }
  CHECK(TsallisInf::LearningRate(1) == 0.5);
  CHECK(TsallisInf::LearningRate(4) == 0.25);
}

TEST_CASE("tsallis-inf reward estimator") {
  Vector p = V({0.5, 0.5});
  Vector g = TsallisInf::RewardEstimate(SimplexPoint(p), 0, 0.0);
  CHECK(g[0] == -1.0);
  CHECK(g[1] == 1.0);
  Vector q = V({0.1, 0.7, 0.2});
  g = TsallisInf::RewardEstimate(SimplexPoint(q), 2, 1.0);
  CHECK((g.array() == 1.0).all());
}

TEST_CASE("tsallis-inf concentrates on the better action") {
  TsallisInf learner(2);
  Rng rng(2, Stream::kLearner);
  for (int t = 0; t < 10000; ++t) {
    const int a = learner.Choose(rng);
    learner.Update(a, Feedback::Uninformed(a == 0 ? 0.5 : -0.5));
  }
  SimplexPoint p = learner.CurrentDistribution();
  CHECK(p[0] >= 0.99);
  // The learner's distribution is the FTRL maximizer: check against grid.
  const Vector l = learner.cumulative();
  const double eta = TsallisInf::LearningRate(learner.round());
  Vector grid = testing::GridArgmax2(
      [&](const Vector& w) { return w.dot(l) + testing::Phi(w, 0.5) / eta; },
      1e-6);
  CHECK(std::abs(p[0] - grid[0]) < 1e-5);
}

TEST_CASE("tsallis-inf is invariant to a constant shift of its estimates") {
  Vector l = V({3.0, -2.0, 0.25, 7.5});
  for (double c : {-100.0, 0.5, 1e4}) {
    Vector shifted = l.array() + c;
    CHECK((FtrlTsallisSolve(l, 0.2, 0.5).weights() -
           FtrlTsallisSolve(shifted, 0.2, 0.5).weights())
              .cwiseAbs()
              .maxCoeff() <= 1e-9);
  }
}

TEST_CASE("tsallis-inf contract checks") {
  TsallisInf learner(2);
  Rng rng(3);
  CHECK_THROWS_AS(learner.Update(0, Feedback::Uninformed(0.0)), RuntimeError);
  const int a = learner.Choose(rng);
  CHECK_THROWS_AS(learner.Update(a, Feedback::Informed(0.0, 1)),
                  CompatibilityError);
  CHECK_THROWS_AS(learner.Update(a, Feedback::Uninformed(1.5)),
                  InvalidArgumentError);
  CHECK_THROWS_AS(learner.Update(5, Feedback::Uninformed(0.0)),
                  InvalidArgumentError);
  CHECK(learner.Accepts(FeedbackModel::kUninformed));
  CHECK_FALSE(learner.Accepts(FeedbackModel::kInformed));
  CHECK_THROWS_AS(TsallisInf(0), InvalidArgumentError);
}

TEST_CASE("learners are deterministic given the rng stream") {
  BilinearGame g = BilinearGame::NormalForm(Matrix::Identity(3, 3) * 0.5);
  for (const char* name : {"tsallis_inf", "tsallis_spm"}) {
    LearnerConfig cfg;
    cfg.name = name;
    auto a = MakeLearner(cfg, g, 100);
    auto b = a->Clone();
    Rng ra(9, Stream::kLearner), rb(9, Stream::kLearner), noise(9, Stream::kNoise);
    for (int t = 0; t < 200; ++t) {
      const int xa = a->Choose(ra);
      const int xb = b->Choose(rb);
      CHECK(xa == xb);
      const double r = noise.Uniform() * 2 - 1;
      a->Update(xa, Feedback::Uninformed(r));
      b->Update(xb, Feedback::Uninformed(r));
    }
  }
}

TEST_CASE("pure-ucb choice and radius") {
  PureUcb learner(3, 2, 0.01);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 2; ++y) CHECK(learner.UpperBound(x, y) == 1.0);
  CHECK(learner.Choose() == 0);
  CHECK(PureUcb::Radius(1, 0.01) == doctest::Approx(4.4505028).epsilon(1e-7));
  learner.Update(0, Feedback::Informed(0.0, 0));
  CHECK(learner.UpperBound(0, 0) == doctest::Approx(4.4505028).epsilon(1e-7));
}

TEST_CASE("pure-ucb with one column is plain UCB") {
  PureUcb learner(4, 1, 0.05);
  Rng rng(4, Stream::kNoise);
  const double means[] = {0.1, 0.4, -0.2, 0.3};
  std::vector<long> n(4, 0);
  std::vector<double> sum(4, 0.0);
  for (int t = 0; t < 500; ++t) {
    // Reference UCB index computed by hand.
    int expect = 0;
    double best = -1e300;
    for (int x = 0; x < 4; ++x) {
      const double u =
          n[x] == 0 ? 1.0
                    : sum[x] / n[x] + std::sqrt((4 * std::log(1 / 0.05) +
                                                 2 * std::log(1.0 + n[x])) /
                                                n[x]);
      if (u > best) {
        best = u;
        expect = x;
      }
    }
    const int x = learner.Choose();
    CHECK(x == expect);
    const double r = rng.Bernoulli(0.5 * (1 + means[x])) ? 1.0 : -1.0;
    learner.Update(x, Feedback::Informed(r, 0));
    ++n[x];
    sum[x] += r;
  }
}

TEST_CASE("pure-ucb bookkeeping") {
  PureUcb learner(2, 2, 0.1);
  learner.Update(0, Feedback::Informed(0.5, 1));
  CHECK(learner.pulls(0, 1) == 1);
  CHECK(learner.reward_sum(0, 1) == 0.5);
  CHECK(learner.pulls(0, 0) == 0);
  PureUcb two(2, 2, 0.1);
  two.Update(1, Feedback::Informed(1.0, 1));
  two.Update(1, Feedback::Informed(-1.0, 1));
  CHECK(two.pulls(1, 1) == 2);
  CHECK(two.reward_sum(1, 1) / two.pulls(1, 1) == 0.0);
  Rng rng(5);
  PureUcb many(3, 3, 0.01);
  for (int t = 0; t < 777; ++t) {
    const int x = many.Choose();
    many.Update(x, Feedback::Informed(rng.Uniform() * 2 - 1, t % 3));
  }
  CHECK(many.total_pulls() == 777);
  CHECK_THROWS_AS(many.Update(0, Feedback::Uninformed(0.0)), CompatibilityError);
  CHECK_THROWS_AS(many.Update(0, Feedback::Informed(0.0, 3)), InvalidArgumentError);
}

TEST_CASE("tsallis-spm default parameters and first round") {
  for (int m : {2, 3, 8, 20}) {
    TsallisSpm learner(ActionSet::StandardBasis(m));
    const double alpha = 1.0 - 1.0 / (4.0 * std::log(m));
    CHECK(learner.alpha() == doctest::Approx(alpha));
    const double c = learner.design().c_achieved;
    CHECK(learner.beta() == doctest::Approx(8 * c * m / (1 - alpha)));
    CHECK(learner.beta_bar() ==
          doctest::Approx(32.0 * m / ((1 - alpha) * (1 - alpha) * learner.beta())));
    learner.Prepare();
    CHECK(learner.last_gamma() <= 0.5);
    CHECK(learner.last_p_hat().MaxWeight() == doctest::Approx(1.0 / m));
  }
}

TEST_CASE("tsallis-spm estimator examples") {
  ActionSet e = ActionSet::StandardBasis(2);
  Matrix s_inv = InverseVarianceMatrix(SimplexPoint::Uniform(2), e);
  CHECK((s_inv - 2 * Matrix::Identity(2, 2)).norm() < 1e-12);
  Vector g = TsallisSpm::RewardEstimate(e, s_inv, 0, 0.3);
  CHECK(g[0] == doctest::Approx(0.6));
  CHECK(g[1] == doctest::Approx(0.0));
  g = TsallisSpm::RewardEstimate(e, s_inv, 1, 0.0);
  CHECK(g.norm() == 0.0);
}

TEST_CASE("tsallis-spm produces valid distributions and monotone beta") {
  Rng rng(6, Stream::kAux);
  for (int trial = 0; trial < 1000; ++trial) {
    TsallisSpm learner(ActionSet::StandardBasis(2));
    Rng lr(trial, Stream::kLearner);
    const int rounds = 1 + static_cast<int>(rng.Uniform() * 20);
    double beta = learner.beta();
    for (int t = 0; t < rounds; ++t) {
      const int x = learner.Choose(lr);
      CHECK(IsDistribution(learner.LastDistribution()->weights()));
      CHECK(learner.last_gamma() > 0.0);
      CHECK(learner.last_gamma() <= 1.0);
      learner.Update(x, Feedback::Uninformed(rng.Uniform() * 2 - 1));
      CHECK(learner.beta() > beta);
      beta = learner.beta();
    }
  }
}

TEST_CASE("tsallis-spm on a linear action set") {
  Rng rng(7, Stream::kAux);
  std::vector<Vector> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(testing::RandomUnitVector(rng, 3));
  TsallisSpm learner{ActionSet(xs)};
  Rng lr(7, Stream::kLearner);
  for (int t = 0; t < 300; ++t) {
    const int x = learner.Choose(lr);
    CHECK(x >= 0);
    CHECK(x < 12);
    learner.Update(x, Feedback::Uninformed(0.1));
  }
  CHECK(learner.round() == 301);
  CHECK_THROWS_AS(learner.Update(0, Feedback::Uninformed(0.0)), RuntimeError);
  learner.Choose(lr);
  CHECK_THROWS_AS(learner.Update(0, Feedback::Informed(0.0, 0)),
                  CompatibilityError);
}

TEST_CASE("pure-lin-ucb first round and radius") {
  ActionSet x = ActionSet::StandardBasis(2);
  std::vector<Vector> ys = {V({1, 0}), V({0.6, 0.8})};
  PureLinUcb learner(x, ActionSet(ys), 1.0, 0.1);
  const double beta1 = learner.ConfidenceRadius(1);
  CHECK(beta1 == doctest::Approx(2.0 + std::sqrt(2 * std::log(10.0) +
                                                  4 * std::log(1 + 0.25))));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(learner.UpperBound(i, j) ==
            doctest::Approx(beta1 * learner.PairFeature(i, j).norm()));
    }
  // Radius grows with t.
  for (long t = 1; t < 1000; t += 37) {
    CHECK(learner.ConfidenceRadius(t + 1) > learner.ConfidenceRadius(t));
  }
}

TEST_CASE("pure-lin-ucb scalar ridge") {
  Vector one = V({1.0});
  PureLinUcb learner(ActionSet({one}), ActionSet({one}), 1.0, 0.1);
  for (int k = 1; k <= 20; ++k) {
    learner.Update(0, Feedback::Informed(1.0, 0));
    CHECK(learner.Estimate()(0, 0) == doctest::Approx(k / (k + 1.0)));
  }
}

TEST_CASE("pure-lin-ucb update and recovery") {
  ActionSet x = ActionSet::StandardBasis(2);
  PureLinUcb learner(x, x, 1.0, 0.01);
  learner.Update(0, Feedback::Informed(1.0, 1));
  Vector a = learner.PairFeature(0, 1);
  CHECK(a.norm() == doctest::Approx(1.0));
  CHECK((learner.psd().v - (Matrix::Identity(4, 4) + a * a.transpose())).norm() < 1e-15);

  Matrix truth(2, 2);
  truth << 0.3, -0.5, 0.1, 0.4;
  PureLinUcb rec(x, x, 1.0, 0.01);
  Matrix v = Matrix::Identity(4, 4);
  for (int t = 0; t < 1000; ++t) {
    const int i = t % 2, j = (t / 2) % 2;
    rec.Update(i, Feedback::Informed(truth(i, j), j));
    const Vector f = rec.PairFeature(i, j);
    v += f * f.transpose();
  }
  CHECK((rec.psd().v_inv - v.inverse()).norm() <= 1e-8);
  CHECK((rec.Estimate() - truth).norm() <= 1e-2);
  CHECK(rec.EllipsoidContains(truth));
}

TEST_CASE("pure-lin-ucb with one column is linear UCB") {
  Rng rng(8, Stream::kAux);
  std::vector<Vector> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(testing::RandomUnitVector(rng, 3));
  Vector one = V({1.0});
  PureLinUcb learner(ActionSet(xs), ActionSet({one}), 1.0, 0.05);
  Vector theta = testing::RandomUnitVector(rng, 3) * 0.8;
  Matrix v = Matrix::Identity(3, 3);
  Vector b = Vector::Zero(3);
  for (int t = 1; t <= 200; ++t) {
    const Vector est = v.ldlt().solve(b);
    const Matrix v_inv = v.inverse();
    const double beta = learner.ConfidenceRadius(t);
    int expect = 0;
    double best = -1e300;
    for (int i = 0; i < 10; ++i) {
      const double u = xs[i].dot(est) + beta * std::sqrt(xs[i].dot(v_inv * xs[i]));
      if (u > best + 1e-12) {
        best = u;
        expect = i;
      }
    }
    const int x = learner.Choose();
    CHECK(x == expect);
    const double r = xs[x].dot(theta) + 0.1 * (rng.Uniform() - 0.5);
    learner.Update(x, Feedback::Informed(r, 0));
    v += xs[x] * xs[x].transpose();
    b += r * xs[x];
  }
  CHECK_THROWS_AS(learner.Update(0, Feedback::Uninformed(0.0)), CompatibilityError);
}

TEST_CASE("learner factory") {
  BilinearGame g = BilinearGame::NormalForm(Matrix::Zero(3, 2));
  LearnerConfig cfg;
  cfg.name = "pure_ucb";
  auto ucb = MakeLearner(cfg, g, 1000);
  CHECK(dynamic_cast<PureUcb*>(ucb.get())->delta() == doctest::Approx(1e-3));
  cfg.name = "tsallis_inf";
  cfg.alpha = 0.3;
  CHECK(dynamic_cast<TsallisInf*>(MakeLearner(cfg, g, 10).get())->alpha() == 0.3);
  cfg = {};
  cfg.name = "fixed";
  cfg.action = 2;
  Rng rng(1);
  CHECK(MakeLearner(cfg, g, 10)->Choose(rng) == 2);
  cfg.action = 3;
  CHECK_THROWS_AS(MakeLearner(cfg, g, 10), InvalidArgumentError);
  cfg = {};
  cfg.name = "nope";
  CHECK_THROWS_AS(MakeLearner(cfg, g, 10), InvalidArgumentError);
  cfg.name = "tsallis_inf";
  CHECK_THROWS_AS(MakeLearner(cfg, g, 0), InvalidArgumentError);
}

}  // TEST_SUITE

}  // namespace
}  // namespace psmrlab
