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

#include "psmrlab/adversaries.h"

#include <cmath>
#include <limits>
#include <string>

#include "psmrlab/catalog.h"
#include "psmrlab/error.h"

namespace psmrlab {

int FixedMixedAct(const SimplexPoint& q, Rng& rng) {
  return rng.Categorical(q.span());
}

int FixedMixedAdversary::Act(const AdversaryContext& ctx, Rng& rng) {
  if (q_.size() != ctx.game.num_y()) {
    throw InvalidArgumentError("mixed strategy size does not match Y");
  }
  return FixedMixedAct(q_, rng);
}

NashAdversary::NashAdversary(const BilinearGame& game) {
  EquilibriumReport report = Analyze(game);
  if (report.has_psne()) pure_ = report.minimax_col;
  q_star_ = std::move(report.q_star);
}

int NashAdversary::Act(const AdversaryContext&, Rng& rng) {
  if (pure_) return *pure_;
  return rng.Categorical(q_star_.span());
}

LowerBoundInstance LowerBoundConstruct(double delta_r, double delta_c,
                                       long horizon, bool use_b) {
  constexpr double kGapCap = 1.0 / 13.0;
  if (!(delta_r > 0.0 && delta_r < kGapCap) ||
      !(delta_c > 0.0 && delta_c < kGapCap)) {
    throw ValidationError("lower-bound gaps must lie in (0, 1/13), got (" +
                          std::to_string(delta_r) + ", " +
                          std::to_string(delta_c) + ")");
  }
  if (horizon < 169) {
    throw ValidationError("lower-bound construction needs T >= 169");
  }
  LowerBoundParams p;
  p.delta_r = delta_r;
  p.delta_c = delta_c;
  p.horizon = horizon;
  p.use_b = use_b;
  const double root_t = std::sqrt(static_cast<double>(horizon));
  const double product = delta_r * delta_c;
  if (1.0 / product < 13.0 * root_t) {
    p.case_one = true;
    p.k = 1.0;
    p.eps = delta_r - 12.0 * product;
    const double scale = 1.0 / (13.0 * product);
    p.t_prime = static_cast<long>(std::floor(scale * scale));
  } else {
    p.case_one = false;
    p.t_prime = horizon;
    p.eps = std::min(1.0, 1.0 / (13.0 * delta_c * root_t));
    p.k = (delta_r - 12.0 / (13.0 * root_t)) / p.eps;
  }

  Matrix m = LowerBoundMatrix(p.k, delta_r, delta_c, use_b);
  if (m.cwiseAbs().maxCoeff() > 1.0 + 1e-12) {
    throw NumericalError("lower-bound matrix has entries outside [-1, 1]");
  }
  if (!(p.eps > 0.0 && p.eps < 1.0 + 1e-15)) {
    throw NumericalError("lower-bound eps outside (0, 1]");
  }
  if (!(p.k * p.eps < delta_r)) {
    throw NumericalError("lower-bound construction violates K eps < delta_r");
  }
  if (!(p.t_prime >= 1 && p.t_prime <= horizon)) {
    throw NumericalError("lower-bound T' outside [1, T]");
  }
  const double div = p.Divergence();
  if (div * div * static_cast<double>(p.t_prime) > 1.0 + 1e-12) {
    throw NumericalError("lower-bound divergence budget delta^2 T' exceeds 1");
  }
  return {BilinearGame::NormalForm(std::move(m)), p};
}

int LowerBoundAct(const LowerBoundParams& params, long t, Rng& rng) {
  if (t < 1) throw InvalidArgumentError("rounds start at 1");
  if (t > params.t_prime) return 0;
  return rng.Bernoulli(params.eps) ? 1 : 0;
}

int BestResponseAdversary::Act(const AdversaryContext& ctx, Rng&) {
  const Matrix& u = ctx.game.utilities();
  if (column_sums_.size() != u.cols() || ctx.history.size() < consumed_) {
    column_sums_ = Vector::Zero(u.cols());
    consumed_ = 0;
  }
  for (; consumed_ < ctx.history.size(); ++consumed_) {
    column_sums_ += u.row(ctx.history[consumed_].x).transpose();
  }
  int best = 0;
  for (int j = 1; j < u.cols(); ++j) {
    if (column_sums_[j] < column_sums_[best]) best = j;
  }
  return best;
}

std::unique_ptr<Adversary> MakeAdversary(const AdversaryConfig& config,
                                         const BilinearGame& game,
                                         long horizon) {
  if (config.name == "fixed_mixed") {
    SimplexPoint q = SimplexPoint::Uniform(game.num_y());
    if (config.q) {
      Vector w = Eigen::Map<const Vector>(config.q->data(), config.q->size());
      if (w.size() != game.num_y()) {
        throw ValidationError("adversary q has " + std::to_string(w.size()) +
                              " entries, game has " +
                              std::to_string(game.num_y()) + " columns");
      }
      q = SimplexPoint(std::move(w), 1e-9);
    }
    return std::make_unique<FixedMixedAdversary>(std::move(q));
  }
  if (config.name == "nash") return std::make_unique<NashAdversary>(game);
  if (config.name == "best_response") {
    return std::make_unique<BestResponseAdversary>();
  }
  if (config.name == "lower_bound") {
    if (!config.delta_r || !config.delta_c) {
      throw ValidationError("lower_bound adversary needs delta_r and delta_c");
    }
    LowerBoundInstance inst = LowerBoundConstruct(
        *config.delta_r, *config.delta_c, horizon, config.use_b);
    if (game.num_x() != 2 || game.num_y() != 2) {
      throw ValidationError("lower_bound adversary needs a 2x2 game");
    }
    return std::make_unique<LowerBoundAdversary>(inst.params);
  }
  throw InvalidArgumentError("unknown adversary '" + config.name + "'");
}

}  // namespace psmrlab
