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

#ifndef PSMRLAB_EXPERIMENT_H_
#define PSMRLAB_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "psmrlab/adversaries.h"
#include "psmrlab/design.h"
#include "psmrlab/game.h"
#include "psmrlab/learners.h"
#include "psmrlab/sim.h"

namespace psmrlab {

inline constexpr char kCsvHeader[] = "experiment_id,seed,t,psmr,nr,er";

// Where the game of an experiment comes from. Exactly one source is set;
// a lower_bound adversary may leave all of them empty and have the game
// built from its gap parameters.
struct GameSource {
  std::optional<std::string> catalog_id;
  double eps = 0.5;
  std::optional<std::string> file;
  std::optional<nlohmann::json> inline_game;
};

struct SeedSpec {
  std::vector<std::uint64_t> explicit_seeds;  // used when non-empty
  long count = 1;
  std::uint64_t base = 0;

  std::vector<std::uint64_t> Resolve() const;
};

struct ExperimentSpec {
  int format_version = 1;
  std::string experiment_id = "experiment";
  GameSource game;
  LearnerConfig learner;
  AdversaryConfig adversary;
  std::optional<FeedbackModel> feedback;  // default follows the learner
  NoiseModel noise = NoiseModel::kTwoPoint;
  long horizon = 0;
  SeedSpec seeds;
  std::optional<std::string> output;
  long stride = 0;  // 0 logs powers of two plus the final round
  // Directory that relative game file paths are resolved against.
  std::string base_dir;
};

ExperimentSpec ExperimentSpecFromJson(const nlohmann::json& j,
                                      const std::string& base_dir = "");
ExperimentSpec ParseExperimentSpec(std::string_view text,
                                   const std::string& base_dir = "");
ExperimentSpec LoadExperimentSpec(const std::string& path);

LearnerConfig LearnerConfigFromJson(const nlohmann::json& j);
AdversaryConfig AdversaryConfigFromJson(const nlohmann::json& j);

// Uninformed when the learner supports it, informed otherwise.
FeedbackModel DefaultFeedback(const std::string& learner_name);

// Game, prototypes and models, ready for RunBatch.
EpisodeSetup ResolveExperiment(const ExperimentSpec& spec);

// Rounds that get a CSV row: every `stride` rounds, or powers of two when
// stride is 0, always including the final round.
std::vector<long> LoggedRounds(long horizon, long stride);

void WriteCsvRows(std::ostream& out, const std::string& experiment_id,
                  const RunResult& result, const std::vector<long>& rounds);

struct RunOptions {
  std::optional<int> threads;
  std::optional<std::string> output;
  std::optional<long> stride;
  std::optional<std::uint64_t> seed_base;
};

// --threads, overridden by the PSMRLAB_THREADS environment variable, else 1.
int ResolveThreads(std::optional<int> requested);

struct ExperimentResult {
  std::string experiment_id;
  EpisodeSetup setup;
  std::vector<std::uint64_t> seeds;
  BatchResult batch;
  std::optional<CurveFitReport> psmr_fit;
  std::optional<std::string> csv_path;
  long csv_rows = 0;
};

ExperimentResult RunExperiment(const ExperimentSpec& spec,
                               const RunOptions& options = {});

struct LowerBoundArm {
  LowerBoundParams params;
  double mean_psmr = 0.0;
  double sd_psmr = 0.0;
  double ci95_half = 0.0;
};

struct LowerBoundReport {
  double delta_r = 0.0;
  double delta_c = 0.0;
  long horizon = 0;
  long num_seeds = 0;
  std::string learner;
  LowerBoundArm arm_a;
  LowerBoundArm arm_b;
  double max_mean_psmr = 0.0;
  std::string max_matrix;  // "A" or "B"
  // min{1 / (delta_r delta_c), sqrt T}.
  double theoretical_scale = 0.0;
};

// Runs the learner against the lower-bound adversary on both matrices.
LowerBoundReport RunLowerBound(double delta_r, double delta_c, long horizon,
                               const std::vector<std::uint64_t>& seeds,
                               const LearnerConfig& learner,
                               NoiseModel noise = NoiseModel::kTwoPoint,
                               int threads = 1);

struct SweepEntry {
  double delta_r = 0.0;
  double delta_c = 0.0;
  std::optional<LowerBoundReport> report;
  std::optional<std::string> error;  // precondition failures land here
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  // Every entry ran and the max mean PSMR rises strictly along the list.
  bool strictly_increasing = false;
};

SweepReport RunLowerBoundSweep(
    const std::vector<std::pair<double, double>>& gaps, long horizon,
    const std::vector<std::uint64_t>& seeds, const LearnerConfig& learner,
    NoiseModel noise = NoiseModel::kTwoPoint, int threads = 1);

// Machine-readable reports.
nlohmann::json AnalysisToJson(const BilinearGame& game);
nlohmann::json DesignToJson(const ExplorationDesign& design,
                            const ActionSet& actions);
nlohmann::json CurveFitToJson(const CurveFitReport& fit);
nlohmann::json ExperimentResultToJson(const ExperimentResult& result);
nlohmann::json LowerBoundReportToJson(const LowerBoundReport& report);
nlohmann::json SweepReportToJson(const SweepReport& sweep);

}  // namespace psmrlab

#endif  // PSMRLAB_EXPERIMENT_H_
