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

#ifndef PSMRLAB_SIM_H_
#define PSMRLAB_SIM_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psmrlab/adversaries.h"
#include "psmrlab/game.h"
#include "psmrlab/learners.h"
#include "psmrlab/rng.h"

namespace psmrlab {

enum class NoiseModel { kTwoPoint, kNoiseless };

const char* NoiseModelName(NoiseModel model);
NoiseModel ParseNoiseModel(const std::string& name);
FeedbackModel ParseFeedbackModel(const std::string& name);

// +1 with probability (1 + mu) / 2, else -1.
double TwoPointSample(double mu, Rng& rng);

double RealizeReward(NoiseModel noise, double mu, Rng& rng);

// Everything a run needs besides the seed. The learner and adversary are
// prototypes; each episode works on its own clones.
struct EpisodeSetup {
  BilinearGame game;
  std::shared_ptr<const Learner> learner;
  std::shared_ptr<const Adversary> adversary;
  FeedbackModel feedback = FeedbackModel::kUninformed;
  NoiseModel noise = NoiseModel::kTwoPoint;
  long horizon = 0;
  // Keep per-round (x, y, reward) in the result.
  bool keep_trace = false;
};

struct RunResult {
  std::uint64_t seed = 0;
  // Index t - 1 holds the running sum through round t.
  std::vector<double> psmr;
  std::vector<double> nr;
  std::vector<double> er;
  Matrix action_counts;  // N(x, y)
  // Rounds with y_t != y*; set only when the game has a PSNE.
  std::optional<long> deviation_count;
  std::vector<HistoryEntry> trace;

  long horizon() const { return static_cast<long>(psmr.size()); }
};

// Reference values shared by every episode of a setup.
struct RegretReference {
  double v_star;
  double v_mix;
  std::optional<int> y_star;
};

RegretReference MakeRegretReference(const BilinearGame& game);

void CheckCompatibility(const Learner& learner, FeedbackModel feedback);

RunResult RunEpisode(const EpisodeSetup& setup, std::uint64_t seed);
RunResult RunEpisode(const EpisodeSetup& setup, const RegretReference& ref,
                     std::uint64_t seed);

// Pointwise statistics of a series across seeds.
struct SeriesStats {
  std::vector<double> mean;
  std::vector<double> sd;         // sample standard deviation
  std::vector<double> ci95_half;  // 1.96 sd / sqrt(n)
};

struct EpisodeSummary {
  std::uint64_t seed = 0;
  double psmr = 0.0;
  double nr = 0.0;
  double er = 0.0;
  Matrix action_counts;
  std::optional<long> deviation_count;
};

struct BatchResult {
  long horizon = 0;
  SeriesStats psmr;
  SeriesStats nr;
  SeriesStats er;
  std::vector<EpisodeSummary> episodes;  // in seed-list order
};

struct BatchOptions {
  int threads = 1;
  // Called once per episode, in seed-list order, before the episode's
  // series are dropped.
  std::function<void(const RunResult&)> observer;
};

// Runs every seed, aggregates in seed-list order so the result does not
// depend on the thread count. Errors are rethrown with the seed attached.
BatchResult RunBatch(const EpisodeSetup& setup,
                     const std::vector<std::uint64_t>& seeds,
                     const BatchOptions& options = {});

struct ModelFit {
  double a = 0.0;
  double b = 0.0;
  double residual_norm = 0.0;
};

struct CurveFitReport {
  ModelFit log_fit;   // a + b ln t
  ModelFit sqrt_fit;  // a + b sqrt t
  std::string winner;  // "log" or "sqrt"
  long first_t = 0;
  long last_t = 0;
};

// Least squares over the tail half of the series, which is taken to hold
// rounds 1..n.
CurveFitReport CurveFit(const std::vector<double>& series);
// Same with explicit round numbers for each point.
CurveFitReport CurveFit(const std::vector<double>& t_values,
                        const std::vector<double>& series);

}  // namespace psmrlab

#endif  // PSMRLAB_SIM_H_
