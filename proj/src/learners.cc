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

#include "psmrlab/learners.h"

#include <cmath>
#include <limits>
#include <string>

#include "psmrlab/error.h"
#include "psmrlab/tsallis.h"

namespace psmrlab {
namespace {

void CheckReward(double r) {
  if (!(r >= -1.0 - 1e-12 && r <= 1.0 + 1e-12)) {
    throw InvalidArgumentError("reward " + std::to_string(r) +
                               " outside [-1, 1]");
  }
}

void CheckAction(int action, int size) {
  if (action < 0 || action >= size) {
    throw InvalidArgumentError("action index out of range");
  }
}

void RequireUninformed(const Feedback& f, const char* who) {
  if (f.opponent_action.has_value()) {
    throw CompatibilityError(std::string(who) +
                             " is uninformed and rejects informed feedback");
  }
}

int RequireInformed(const Feedback& f, const char* who) {
  if (!f.opponent_action.has_value()) {
    throw CompatibilityError(std::string(who) +
                             " needs the opponent's action (informed feedback)");
  }
  return *f.opponent_action;
}

}  // namespace

const char* FeedbackModelName(FeedbackModel model) {
  return model == FeedbackModel::kInformed ? "informed" : "uninformed";
}

// ---------------------------------------------------------------- TsallisInf

TsallisInf::TsallisInf(int num_actions, double alpha)
    : alpha_(alpha), cumulative_(Vector::Zero(num_actions)) {
  if (num_actions <= 0) throw InvalidArgumentError("no actions");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgumentError("alpha must lie in (0, 1)");
  }
  last_p_ = SimplexPoint::Uniform(num_actions);
}

SimplexPoint TsallisInf::CurrentDistribution() {
  FtrlSolution sol = FtrlTsallisSolveDetailed(
      cumulative_, LearningRate(round_), alpha_, warm_);
  warm_ = sol.multiplier_offset;
  return std::move(sol.point);
}

int TsallisInf::Choose(Rng& rng) {
  last_p_ = CurrentDistribution();
  chose_ = true;
  return rng.Categorical(last_p_.span());
}

Vector TsallisInf::RewardEstimate(const SimplexPoint& p, int action,
                                  double reward) {
  Vector g = Vector::Ones(p.size());
  g[action] = 1.0 - (1.0 - reward) / p[action];
  return g;
}

void TsallisInf::Update(int action, const Feedback& feedback) {
  RequireUninformed(feedback, "tsallis_inf");
  CheckAction(action, static_cast<int>(cumulative_.size()));
  CheckReward(feedback.reward);
  if (!chose_) throw RuntimeError("tsallis_inf: Update without Choose");
  // Every coordinate but the played one gains exactly 1.
  cumulative_.array() += 1.0;
  cumulative_[action] -= (1.0 - feedback.reward) / last_p_[action];
  ++round_;
  chose_ = false;
}

// ------------------------------------------------------------------- PureUcb

PureUcb::PureUcb(int num_x, int num_y, double delta)
    : num_x_(num_x),
      num_y_(num_y),
      delta_(delta),
      pulls_(static_cast<size_t>(num_x) * num_y, 0),
      rewards_(static_cast<size_t>(num_x) * num_y, 0.0) {
  if (num_x <= 0 || num_y <= 0) throw InvalidArgumentError("no actions");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw InvalidArgumentError("delta must lie in (0, 1]");
  }
  log_inv_delta_ = -std::log(delta);
}

double PureUcb::Radius(long pulls, double delta) {
  const double n = static_cast<double>(pulls);
  return std::sqrt((4.0 * std::log(1.0 / delta) + 2.0 * std::log1p(n)) / n);
}

double PureUcb::UpperBound(int x, int y) const {
  const size_t k = static_cast<size_t>(x) * num_y_ + y;
  const long n = pulls_[k];
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  return rewards_[k] / nd +
         std::sqrt((4.0 * log_inv_delta_ + 2.0 * std::log1p(nd)) / nd);
}

int PureUcb::Choose() {
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int x = 0; x < num_x_; ++x) {
    double worst = std::numeric_limits<double>::infinity();
    for (int y = 0; y < num_y_; ++y) worst = std::min(worst, UpperBound(x, y));
    if (worst > best_value) {
      best_value = worst;
      best = x;
    }
  }
  return best;
}

int PureUcb::Choose(Rng&) { return Choose(); }

void PureUcb::Update(int action, const Feedback& feedback) {
  const int y = RequireInformed(feedback, "pure_ucb");
  CheckAction(action, num_x_);
  CheckAction(y, num_y_);
  CheckReward(feedback.reward);
  const size_t k = static_cast<size_t>(action) * num_y_ + y;
  ++pulls_[k];
  rewards_[k] += feedback.reward;
}

long PureUcb::total_pulls() const {
  long total = 0;
  for (long n : pulls_) total += n;
  return total;
}

// ---------------------------------------------------------------- TsallisSpm

TsallisSpm::TsallisSpm(ActionSet actions, const TsallisSpmParams& params)
    : actions_(std::move(actions)) {
  const int m = actions_.size();
  if (params.alpha) {
    alpha_ = *params.alpha;
  } else {
    if (m < 2) {
      throw InvalidArgumentError(
          "default alpha = 1 - 1/(4 ln m) needs at least two actions");
    }
    alpha_ = 1.0 - 1.0 / (4.0 * std::log(static_cast<double>(m)));
  }
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) {
    throw InvalidArgumentError("alpha must lie in (0, 1)");
  }
  design_ = KieferWolfowitzDesign(actions_, params.kw_tol);
  c_ = design_.c_achieved;
  const double d = actions_.dim();
  beta_ = 8.0 * c_ * d / (1.0 - alpha_);
  beta_bar_ = 32.0 * d / ((1.0 - alpha_) * (1.0 - alpha_) * beta_);
  cumulative_ = Vector::Zero(m);
  last_p_hat_ = SimplexPoint::Uniform(m);
  last_p_ = last_p_hat_;
}

void TsallisSpm::Prepare() {
  FtrlSolution sol =
      FtrlHybridSolveDetailed(cumulative_, beta_, beta_bar_, alpha_, warm_);
  warm_ = sol.multiplier_offset;
  last_p_hat_ = std::move(sol.point);
  const double top = last_p_hat_.MaxWeight();
  const double d = actions_.dim();
  last_z_ = d * std::pow(std::min(top, 1.0 - top), 1.0 - alpha_) /
            (1.0 - alpha_);
  last_z_ = std::max(0.0, last_z_);
  last_gamma_ = std::min(1.0, 4.0 * c_ * last_z_ / beta_);
  Vector p = (1.0 - last_gamma_) * last_p_hat_.weights() +
             last_gamma_ * design_.p0.weights();
  p /= p.sum();
  last_p_ = SimplexPoint::FromNormalized(std::move(p));
  prepared_ = true;
}

int TsallisSpm::Choose(Rng& rng) {
  Prepare();
  return rng.Categorical(last_p_.span());
}

Vector TsallisSpm::RewardEstimate(const ActionSet& actions,
                                  const Matrix& s_inv, int action,
                                  double reward) {
  const Vector w = s_inv * actions[action];
  Vector g(actions.size());
  for (int i = 0; i < actions.size(); ++i) g[i] = reward * w.dot(actions[i]);
  return g;
}

void TsallisSpm::Update(int action, const Feedback& feedback) {
  RequireUninformed(feedback, "tsallis_spm");
  CheckAction(action, actions_.size());
  CheckReward(feedback.reward);
  if (!prepared_) throw RuntimeError("tsallis_spm: Update without Choose");
  if (cached_p_.size() != last_p_.size() || cached_p_ != last_p_.weights()) {
    cached_s_inv_ = InverseVarianceMatrix(last_p_, actions_);
    cached_p_ = last_p_.weights();
  }
  cumulative_ += RewardEstimate(actions_, cached_s_inv_, action,
                                feedback.reward);
  const double h = TsallisPotential(last_p_hat_, alpha_);
  if (last_z_ > 0.0 && h > 0.0) beta_ += last_z_ / (beta_ * h);
  ++round_;
  prepared_ = false;
}

// ---------------------------------------------------------------- PureLinUcb

PureLinUcb::PureLinUcb(ActionSet x, ActionSet y, double lambda, double delta)
    : x_(std::move(x)),
      y_(std::move(y)),
      lambda_(lambda),
      delta_(delta),
      dim_(x_.dim() * y_.dim()),
      psd_(PsdInit(lambda, x_.dim() * y_.dim())) {
  if (!(delta > 0.0 && delta < 1.0 + 1e-15)) {
    throw InvalidArgumentError("delta must lie in (0, 1]");
  }
  features_.resize(dim_, static_cast<Eigen::Index>(x_.size()) * y_.size());
  for (int i = 0; i < x_.size(); ++i) {
    for (int j = 0; j < y_.size(); ++j) {
      features_.col(i * y_.size() + j) = PairFeature(i, j);
    }
  }
}

Vector PureLinUcb::PairFeature(int x, int y) const {
  const Vector& xv = x_[x];
  const Vector& yv = y_[y];
  Vector a(dim_);
  for (int i = 0; i < xv.size(); ++i) {
    for (int j = 0; j < yv.size(); ++j) a[i * yv.size() + j] = xv[i] * yv[j];
  }
  return a;
}

double PureLinUcb::ConfidenceRadius(long t) const {
  const double d = dim_;
  return std::sqrt(lambda_ * d) +
         std::sqrt(2.0 * std::log(1.0 / delta_) +
                   d * std::log1p(static_cast<double>(t) / (d * lambda_)));
}

Matrix PureLinUcb::Estimate() const {
  const Vector theta = RidgeEstimate(psd_);
  Matrix a(x_.dim(), y_.dim());
  for (int i = 0; i < x_.dim(); ++i) {
    for (int j = 0; j < y_.dim(); ++j) a(i, j) = theta[i * y_.dim() + j];
  }
  return a;
}

double PureLinUcb::UpperBound(int x, int y) const {
  const Vector a = features_.col(x * y_.size() + y);
  return a.dot(RidgeEstimate(psd_)) +
         ConfidenceRadius(round_) * WeightedNorm(psd_, a);
}

int PureLinUcb::Choose() {
  const Vector theta = RidgeEstimate(psd_);
  const double beta = ConfidenceRadius(round_);
  const Vector means = features_.transpose() * theta;
  const Matrix vf = psd_.v_inv * features_;
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < x_.size(); ++i) {
    double worst = std::numeric_limits<double>::infinity();
    for (int j = 0; j < y_.size(); ++j) {
      const int k = i * y_.size() + j;
      const double width =
          std::sqrt(std::max(0.0, features_.col(k).dot(vf.col(k))));
      worst = std::min(worst, means[k] + beta * width);
    }
    if (worst > best_value) {
      best_value = worst;
      best = i;
    }
  }
  return best;
}

int PureLinUcb::Choose(Rng&) { return Choose(); }

void PureLinUcb::Update(int action, const Feedback& feedback) {
  const int y = RequireInformed(feedback, "pure_lin_ucb");
  CheckAction(action, x_.size());
  CheckAction(y, y_.size());
  CheckReward(feedback.reward);
  PsdUpdateInPlace(psd_, features_.col(action * y_.size() + y),
                   feedback.reward);
  ++round_;
}

bool PureLinUcb::EllipsoidContains(const Matrix& a) const {
  Vector diff(dim_);
  const Vector theta = RidgeEstimate(psd_);
  for (int i = 0; i < x_.dim(); ++i) {
    for (int j = 0; j < y_.dim(); ++j) {
      diff[i * y_.dim() + j] = a(i, j) - theta[i * y_.dim() + j];
    }
  }
  return DesignNorm(psd_, diff) <= ConfidenceRadius(psd_.updates);
}

// --------------------------------------------------------------- FixedAction

FixedAction::FixedAction(int num_actions, int action) : action_(action) {
  CheckAction(action, num_actions);
}

// ------------------------------------------------------------------- factory

std::unique_ptr<Learner> MakeLearner(const LearnerConfig& config,
                                     const BilinearGame& game, long horizon) {
  if (horizon <= 0) throw InvalidArgumentError("horizon must be positive");
  const double default_delta = 1.0 / static_cast<double>(horizon);
  if (config.name == "tsallis_inf") {
    return std::make_unique<TsallisInf>(game.num_x(), config.alpha.value_or(0.5));
  }
  if (config.name == "pure_ucb") {
    return std::make_unique<PureUcb>(game.num_x(), game.num_y(),
                                     config.delta.value_or(default_delta));
  }
  if (config.name == "tsallis_spm") {
    TsallisSpmParams params;
    params.alpha = config.alpha;
    params.kw_tol = config.kw_tol.value_or(kDefaultKwTolerance);
    return std::make_unique<TsallisSpm>(game.x(), params);
  }
  if (config.name == "pure_lin_ucb") {
    return std::make_unique<PureLinUcb>(game.x(), game.y(),
                                        config.lambda.value_or(1.0),
                                        config.delta.value_or(default_delta));
  }
  if (config.name == "fixed") {
    return std::make_unique<FixedAction>(game.num_x(), config.action.value_or(0));
  }
  throw InvalidArgumentError("unknown learner '" + config.name + "'");
}

}  // namespace psmrlab
