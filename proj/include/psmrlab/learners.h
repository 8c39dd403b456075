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

#ifndef PSMRLAB_LEARNERS_H_
#define PSMRLAB_LEARNERS_H_

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psmrlab/design.h"
#include "psmrlab/game.h"
#include "psmrlab/linalg.h"
#include "psmrlab/psd.h"
#include "psmrlab/rng.h"
#include "psmrlab/simplex.h"

namespace psmrlab {

enum class FeedbackModel { kUninformed, kInformed };

const char* FeedbackModelName(FeedbackModel model);

// What the learner sees after a round. The opponent's action is present
// exactly under informed feedback.
struct Feedback {
  double reward = 0.0;
  std::optional<int> opponent_action;

  static Feedback Uninformed(double r) { return {r, std::nullopt}; }
  static Feedback Informed(double r, int y) { return {r, y}; }
};

// Per-round protocol: Choose, then Update with the chosen action and the
// round's feedback. A learner draws randomness only from the Rng it is
// handed.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual std::string name() const = 0;
  virtual bool Accepts(FeedbackModel model) const = 0;
  virtual int Choose(Rng& rng) = 0;
  virtual void Update(int action, const Feedback& feedback) = 0;
  // Sampling distribution of the last Choose call, for randomized learners.
  virtual const SimplexPoint* LastDistribution() const { return nullptr; }
  virtual std::unique_ptr<Learner> Clone() const = 0;
};

// FTRL with the Tsallis-entropy regularizer, importance-weighted reward
// estimates and learning rate 1/(2 sqrt(t)). Uninformed.
class TsallisInf : public Learner {
 public:
  explicit TsallisInf(int num_actions, double alpha = 0.5);

  std::string name() const override { return "tsallis_inf"; }
  bool Accepts(FeedbackModel model) const override {
    return model == FeedbackModel::kUninformed;
  }
  int Choose(Rng& rng) override;
  void Update(int action, const Feedback& feedback) override;
  const SimplexPoint* LastDistribution() const override { return &last_p_; }
  std::unique_ptr<Learner> Clone() const override {
    return std::make_unique<TsallisInf>(*this);
  }

  // The distribution Choose would sample from in the current round.
  SimplexPoint CurrentDistribution();

  static double LearningRate(long round) {
    return 0.5 / std::sqrt(static_cast<double>(round));
  }
  // 1 - (1 - r) / p_x on the played action, 1 elsewhere.
  static Vector RewardEstimate(const SimplexPoint& p, int action,
                               double reward);

  long round() const { return round_; }
  double alpha() const { return alpha_; }
  const Vector& cumulative() const { return cumulative_; }

 private:
  double alpha_;
  Vector cumulative_;
  long round_ = 1;
  SimplexPoint last_p_;
  std::optional<double> warm_;
  bool chose_ = false;
};

// Optimistic pure maximin over per-pair upper confidence bounds. Informed.
class PureUcb : public Learner {
 public:
  PureUcb(int num_x, int num_y, double delta);

  std::string name() const override { return "pure_ucb"; }
  bool Accepts(FeedbackModel model) const override {
    return model == FeedbackModel::kInformed;
  }
  int Choose(Rng& rng) override;
  int Choose();
  void Update(int action, const Feedback& feedback) override;
  std::unique_ptr<Learner> Clone() const override {
    return std::make_unique<PureUcb>(*this);
  }

  // 1 for unvisited pairs, otherwise mean + confidence radius.
  double UpperBound(int x, int y) const;
  static double Radius(long pulls, double delta);

  long pulls(int x, int y) const { return pulls_[x * num_y_ + y]; }
  double reward_sum(int x, int y) const { return rewards_[x * num_y_ + y]; }
  long total_pulls() const;
  double delta() const { return delta_; }

 private:
  int num_x_;
  int num_y_;
  double delta_;
  double log_inv_delta_;
  std::vector<long> pulls_;
  std::vector<double> rewards_;
};

struct TsallisSpmParams {
  std::optional<double> alpha;  // default 1 - 1/(4 ln m_x)
  double kw_tol = kDefaultKwTolerance;
};

// FTRL over a linear action set with a hybrid Tsallis regularizer,
// G-optimal exploration mixing and a stability-penalty-matching learning
// rate. Uninformed.
class TsallisSpm : public Learner {
 public:
  TsallisSpm(ActionSet actions, const TsallisSpmParams& params = {});

  std::string name() const override { return "tsallis_spm"; }
  bool Accepts(FeedbackModel model) const override {
    return model == FeedbackModel::kUninformed;
  }
  int Choose(Rng& rng) override;
  void Update(int action, const Feedback& feedback) override;
  const SimplexPoint* LastDistribution() const override { return &last_p_; }
  std::unique_ptr<Learner> Clone() const override {
    return std::make_unique<TsallisSpm>(*this);
  }

  // Computes p_hat, z_t, gamma_t and p for the current round without
  // sampling. Choose calls this.
  void Prepare();

  // r <x_played, S^{-1} x> for every action x.
  static Vector RewardEstimate(const ActionSet& actions, const Matrix& s_inv,
                               int action, double reward);

  const ExplorationDesign& design() const { return design_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double beta_bar() const { return beta_bar_; }
  double c() const { return c_; }
  double last_gamma() const { return last_gamma_; }
  double last_z() const { return last_z_; }
  const SimplexPoint& last_p_hat() const { return last_p_hat_; }
  const Vector& cumulative() const { return cumulative_; }
  long round() const { return round_; }

 private:
  ActionSet actions_;
  ExplorationDesign design_;
  double alpha_;
  double c_;
  double beta_;
  double beta_bar_;
  Vector cumulative_;
  long round_ = 1;
  SimplexPoint last_p_hat_;
  SimplexPoint last_p_;
  double last_z_ = 0.0;
  double last_gamma_ = 0.0;
  std::optional<double> warm_;
  bool prepared_ = false;
  Vector cached_p_;
  Matrix cached_s_inv_;
};

// Ridge estimate of vec(A) with ellipsoidal upper confidence bounds and
// pure maximin play over them. Informed.
class PureLinUcb : public Learner {
 public:
  PureLinUcb(ActionSet x, ActionSet y, double lambda, double delta);

  std::string name() const override { return "pure_lin_ucb"; }
  bool Accepts(FeedbackModel model) const override {
    return model == FeedbackModel::kInformed;
  }
  int Choose(Rng& rng) override;
  int Choose();
  void Update(int action, const Feedback& feedback) override;
  std::unique_ptr<Learner> Clone() const override {
    return std::make_unique<PureLinUcb>(*this);
  }

  // sqrt(lambda D) + sqrt(2 ln(1/delta) + D ln(1 + t/(D lambda))), D = d_x d_y.
  double ConfidenceRadius(long t) const;
  // <x, A_hat y> + beta_t ||vec(x y^T)||_{V^{-1}} for the current round.
  double UpperBound(int x, int y) const;
  // Row-major vec(x y^T).
  Vector PairFeature(int x, int y) const;
  // d_x by d_y matrix built from V^{-1} b.
  Matrix Estimate() const;
  // ||vec(A) - vec(A_hat)||_V <= beta_t with t = updates so far.
  bool EllipsoidContains(const Matrix& a) const;

  const PsdState& psd() const { return psd_; }
  long round() const { return round_; }

 private:
  ActionSet x_;
  ActionSet y_;
  double lambda_;
  double delta_;
  int dim_;
  PsdState psd_;
  Matrix features_;  // dim x (num_x * num_y)
  long round_ = 1;
};

// Plays one fixed action; a baseline for harness checks.
class FixedAction : public Learner {
 public:
  FixedAction(int num_actions, int action);

  std::string name() const override { return "fixed"; }
  bool Accepts(FeedbackModel) const override { return true; }
  int Choose(Rng&) override { return action_; }
  void Update(int, const Feedback&) override {}
  std::unique_ptr<Learner> Clone() const override {
    return std::make_unique<FixedAction>(*this);
  }

 private:
  int action_;
};

struct LearnerConfig {
  std::string name = "tsallis_inf";
  std::optional<double> alpha;
  std::optional<double> delta;  // default 1/T
  std::optional<double> lambda;  // default 1
  std::optional<double> kw_tol;
  std::optional<int> action;  // fixed learner only
};

// Builds a learner for `game` with horizon-dependent defaults.
std::unique_ptr<Learner> MakeLearner(const LearnerConfig& config,
                                     const BilinearGame& game, long horizon);

}  // namespace psmrlab

#endif  // PSMRLAB_LEARNERS_H_
