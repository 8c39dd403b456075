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

#ifndef PSMRLAB_ADVERSARIES_H_
#define PSMRLAB_ADVERSARIES_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psmrlab/game.h"
#include "psmrlab/rng.h"
#include "psmrlab/simplex.h"

namespace psmrlab {

struct HistoryEntry {
  int x;
  int y;
  double reward;  // realized, noise included
};

// Everything an adaptive adversary may condition on before round t: the
// game and the realized history of rounds 1..t-1. Never the learner's
// mixed strategy.
struct AdversaryContext {
  const BilinearGame& game;
  std::span<const HistoryEntry> history;

  long round() const { return static_cast<long>(history.size()) + 1; }
};

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  virtual int Act(const AdversaryContext& ctx, Rng& rng) = 0;
  virtual std::unique_ptr<Adversary> Clone() const = 0;
};

// Samples every round from a fixed distribution over Y.
class FixedMixedAdversary : public Adversary {
 public:
  explicit FixedMixedAdversary(SimplexPoint q) : q_(std::move(q)) {}
  std::string name() const override { return "fixed_mixed"; }
  int Act(const AdversaryContext& ctx, Rng& rng) override;
  std::unique_ptr<Adversary> Clone() const override {
    return std::make_unique<FixedMixedAdversary>(*this);
  }
  const SimplexPoint& q() const { return q_; }

 private:
  SimplexPoint q_;
};

int FixedMixedAct(const SimplexPoint& q, Rng& rng);

// Plays the minimax column when a PSNE exists, otherwise samples q*.
class NashAdversary : public Adversary {
 public:
  explicit NashAdversary(const BilinearGame& game);
  std::string name() const override { return "nash"; }
  int Act(const AdversaryContext& ctx, Rng& rng) override;
  std::unique_ptr<Adversary> Clone() const override {
    return std::make_unique<NashAdversary>(*this);
  }
  std::optional<int> pure_action() const { return pure_; }
  const SimplexPoint& q_star() const { return q_star_; }

 private:
  std::optional<int> pure_;
  SimplexPoint q_star_;
};

struct LowerBoundParams {
  double k = 1.0;
  double delta_r = 0.0;
  double delta_c = 0.0;
  double eps = 0.0;
  long t_prime = 0;
  long horizon = 0;
  bool use_b = false;  // rows swapped
  bool case_one = true;

  // eps * delta_c - K * eps + delta_r.
  double Divergence() const { return eps * delta_c - k * eps + delta_r; }
};

struct LowerBoundInstance {
  BilinearGame game;
  LowerBoundParams params;
};

// Builds the hard 2x2 instance for gaps (delta_r, delta_c) and horizon T.
// Requires 0 < delta_r, delta_c < 1/13 and T >= 169; asserts the entry
// range, K eps < delta_r and delta^2 T' <= 1 before returning.
LowerBoundInstance LowerBoundConstruct(double delta_r, double delta_c,
                                       long horizon, bool use_b = false);

// y ~ (1 - eps, eps) for t <= T', else y* = the first column.
int LowerBoundAct(const LowerBoundParams& params, long t, Rng& rng);

class LowerBoundAdversary : public Adversary {
 public:
  explicit LowerBoundAdversary(LowerBoundParams params) : params_(params) {}
  std::string name() const override { return "lower_bound"; }
  int Act(const AdversaryContext& ctx, Rng& rng) override {
    return LowerBoundAct(params_, ctx.round(), rng);
  }
  std::unique_ptr<Adversary> Clone() const override {
    return std::make_unique<LowerBoundAdversary>(*this);
  }
  const LowerBoundParams& params() const { return params_; }

 private:
  LowerBoundParams params_;
};

// Best response to the learner's empirical play:
// argmin_y sum_{s<t} u(x_s, y), lowest index on ties.
class BestResponseAdversary : public Adversary {
 public:
  std::string name() const override { return "best_response"; }
  int Act(const AdversaryContext& ctx, Rng& rng) override;
  std::unique_ptr<Adversary> Clone() const override {
    return std::make_unique<BestResponseAdversary>(*this);
  }

 private:
  // Column sums over the consumed prefix of the history.
  Vector column_sums_;
  size_t consumed_ = 0;
};

struct AdversaryConfig {
  std::string name = "nash";
  std::optional<std::vector<double>> q;
  std::optional<double> delta_r;
  std::optional<double> delta_c;
  bool use_b = false;
};

std::unique_ptr<Adversary> MakeAdversary(const AdversaryConfig& config,
                                         const BilinearGame& game,
                                         long horizon);

}  // namespace psmrlab

#endif  // PSMRLAB_ADVERSARIES_H_
