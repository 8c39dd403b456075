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

#include "psmrlab/sim.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "psmrlab/error.h"

namespace psmrlab {

const char* NoiseModelName(NoiseModel model) {
  return model == NoiseModel::kTwoPoint ? "two_point" : "noiseless";
}

NoiseModel ParseNoiseModel(const std::string& name) {
  if (name == "two_point" || name == "two-point") return NoiseModel::kTwoPoint;
  if (name == "noiseless") return NoiseModel::kNoiseless;
  throw ValidationError("unknown noise model '" + name +
                        "' (expected two_point or noiseless)");
}

FeedbackModel ParseFeedbackModel(const std::string& name) {
  if (name == "uninformed") return FeedbackModel::kUninformed;
  if (name == "informed") return FeedbackModel::kInformed;
  throw ValidationError("unknown feedback model '" + name +
                        "' (expected uninformed or informed)");
}

double TwoPointSample(double mu, Rng& rng) {
  if (!(std::abs(mu) <= 1.0)) {
    throw InvalidArgumentError("two-point noise needs |mu| <= 1, got " +
                               std::to_string(mu));
  }
  return rng.Bernoulli(0.5 * (1.0 + mu)) ? 1.0 : -1.0;
}

double RealizeReward(NoiseModel noise, double mu, Rng& rng) {
  return noise == NoiseModel::kTwoPoint ? TwoPointSample(mu, rng) : mu;
}

RegretReference MakeRegretReference(const BilinearGame& game) {
  EquilibriumReport report = Analyze(game);
  RegretReference ref{report.v_star, report.v_mix, std::nullopt};
  if (report.has_psne()) ref.y_star = report.minimax_col;
  return ref;
}

void CheckCompatibility(const Learner& learner, FeedbackModel feedback) {
  if (!learner.Accepts(feedback)) {
    throw CompatibilityError("learner '" + learner.name() +
                             "' does not support " +
                             FeedbackModelName(feedback) + " feedback");
  }
}

RunResult RunEpisode(const EpisodeSetup& setup, std::uint64_t seed) {
  return RunEpisode(setup, MakeRegretReference(setup.game), seed);
}

RunResult RunEpisode(const EpisodeSetup& setup, const RegretReference& ref,
                     std::uint64_t seed) {
  if (setup.horizon <= 0) throw InvalidArgumentError("horizon must be >= 1");
  if (!setup.learner || !setup.adversary) {
    throw InvalidArgumentError("episode needs a learner and an adversary");
  }
  CheckCompatibility(*setup.learner, setup.feedback);

  std::unique_ptr<Learner> learner = setup.learner->Clone();
  std::unique_ptr<Adversary> adversary = setup.adversary->Clone();
  Rng learner_rng(seed, Stream::kLearner);
  Rng adversary_rng(seed, Stream::kAdversary);
  Rng noise_rng(seed, Stream::kNoise);

  const BilinearGame& game = setup.game;
  const Matrix& u = game.utilities();
  const long horizon = setup.horizon;
  const bool informed = setup.feedback == FeedbackModel::kInformed;
  const double gap_mix = ref.v_mix - ref.v_star;

  RunResult result;
  result.seed = seed;
  result.psmr.resize(horizon);
  result.nr.resize(horizon);
  result.er.resize(horizon);
  result.action_counts = Matrix::Zero(game.num_x(), game.num_y());
  std::vector<HistoryEntry> history;
  history.reserve(horizon);
  std::vector<double> utility(horizon);
  long deviations = 0;

  double psmr = 0.0;
  for (long t = 1; t <= horizon; ++t) {
    // The adversary commits from history through t - 1 before x_t exists.
    AdversaryContext ctx{game, history};
    const int y = adversary->Act(ctx, adversary_rng);
    const int x = learner->Choose(learner_rng);
    if (x < 0 || x >= game.num_x() || y < 0 || y >= game.num_y()) {
      throw RuntimeError("action index out of range in round " +
                         std::to_string(t));
    }
    const double mu = u(x, y);
    const double r = RealizeReward(setup.noise, mu, noise_rng);
    learner->Update(x, informed ? Feedback::Informed(r, y)
                                : Feedback::Uninformed(r));
    history.push_back({x, y, r});
    utility[t - 1] = mu;
    result.action_counts(x, y) += 1.0;
    if (ref.y_star && y != *ref.y_star) ++deviations;

    psmr += ref.v_star - mu;
    result.psmr[t - 1] = psmr;
    result.nr[t - 1] = psmr + static_cast<double>(t) * gap_mix;
  }

  // External regret against the best fixed row in hindsight, from the
  // stored (y_t, u_t) pairs.
  Vector row_sums = Vector::Zero(game.num_x());
  double realized = 0.0;
  for (long t = 0; t < horizon; ++t) {
    row_sums += u.col(history[t].y);
    realized += utility[t];
    result.er[t] = row_sums.maxCoeff() - realized;
  }

  if (ref.y_star) result.deviation_count = deviations;
  if (setup.keep_trace) result.trace = std::move(history);
  return result;
}

namespace {

// Welford accumulation of one series, pointwise in t.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(long n) : mean_(n, 0.0), m2_(n, 0.0) {}

  void Add(const std::vector<double>& x) {
    ++count_;
    const double inv = 1.0 / static_cast<double>(count_);
    for (size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - mean_[i];
      mean_[i] += d * inv;
      m2_[i] += d * (x[i] - mean_[i]);
    }
  }

  SeriesStats Finish() {
    SeriesStats s;
    const size_t n = mean_.size();
    s.sd.assign(n, 0.0);
    s.ci95_half.assign(n, 0.0);
    if (count_ > 1) {
      const double denom = static_cast<double>(count_ - 1);
      const double root_n = std::sqrt(static_cast<double>(count_));
      for (size_t i = 0; i < n; ++i) {
        s.sd[i] = std::sqrt(std::max(0.0, m2_[i] / denom));
        s.ci95_half[i] = 1.96 * s.sd[i] / root_n;
      }
    }
    s.mean = std::move(mean_);
    return s;
  }

 private:
  std::vector<double> mean_;
  std::vector<double> m2_;
  long count_ = 0;
};

[[noreturn]] void RethrowWithSeed(std::exception_ptr e, std::uint64_t seed) {
  const std::string prefix = "seed " + std::to_string(seed) + ": ";
  try {
    std::rethrow_exception(e);
  } catch (const Error& err) {
    throw Error(err.kind(), prefix + err.what());
  } catch (const std::exception& err) {
    throw RuntimeError(prefix + err.what());
  }
}

}  // namespace

BatchResult RunBatch(const EpisodeSetup& setup,
                     const std::vector<std::uint64_t>& seeds,
                     const BatchOptions& options) {
  if (seeds.empty()) throw InvalidArgumentError("batch needs at least one seed");
  if (setup.horizon <= 0) throw InvalidArgumentError("horizon must be >= 1");
  if (!setup.learner) throw InvalidArgumentError("batch needs a learner");
  CheckCompatibility(*setup.learner, setup.feedback);
  const RegretReference ref = MakeRegretReference(setup.game);
  const size_t threads =
      static_cast<size_t>(std::max(1, options.threads));

  BatchResult batch;
  batch.horizon = setup.horizon;
  SeriesAccumulator psmr(setup.horizon), nr(setup.horizon), er(setup.horizon);

  for (size_t start = 0; start < seeds.size(); start += threads) {
    const size_t stop = std::min(seeds.size(), start + threads);
    std::vector<RunResult> results(stop - start);
    std::vector<std::exception_ptr> errors(stop - start);
    auto work = [&](size_t i) {
      try {
        results[i] = RunEpisode(setup, ref, seeds[start + i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (stop - start == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (size_t i = 0; i < stop - start; ++i) pool.emplace_back(work, i);
      for (std::thread& th : pool) th.join();
    }
    for (size_t i = 0; i < results.size(); ++i) {
      if (errors[i]) RethrowWithSeed(errors[i], seeds[start + i]);
      const RunResult& r = results[i];
      if (options.observer) options.observer(r);
      psmr.Add(r.psmr);
      nr.Add(r.nr);
      er.Add(r.er);
      batch.episodes.push_back({r.seed, r.psmr.back(), r.nr.back(),
                                r.er.back(), r.action_counts,
                                r.deviation_count});
    }
  }
  batch.psmr = psmr.Finish();
  batch.nr = nr.Finish();
  batch.er = er.Finish();
  return batch;
}

namespace {

ModelFit FitLinear(const std::vector<double>& f, const std::vector<double>& y) {
  const double n = static_cast<double>(f.size());
  double fm = 0.0, ym = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    fm += f[i];
    ym += y[i];
  }
  fm /= n;
  ym /= n;
  double sff = 0.0, sfy = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    sff += (f[i] - fm) * (f[i] - fm);
    sfy += (f[i] - fm) * (y[i] - ym);
  }
  ModelFit fit;
  fit.b = sff > 0.0 ? sfy / sff : 0.0;
  fit.a = ym - fit.b * fm;
  double ss = 0.0;
  for (size_t i = 0; i < f.size(); ++i) {
    const double e = y[i] - fit.a - fit.b * f[i];
    ss += e * e;
  }
  fit.residual_norm = std::sqrt(ss);
  return fit;
}

}  // namespace

CurveFitReport CurveFit(const std::vector<double>& series) {
  std::vector<double> t(series.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<double>(i + 1);
  return CurveFit(t, series);
}

CurveFitReport CurveFit(const std::vector<double>& t_values,
                        const std::vector<double>& series) {
  if (t_values.size() != series.size()) {
    throw InvalidArgumentError("curve fit needs one round number per point");
  }
  if (series.size() < 10) {
    throw InvalidArgumentError("curve fit needs at least 10 points");
  }
  const size_t begin = series.size() / 2;
  std::vector<double> y(series.begin() + begin, series.end());
  std::vector<double> f_log, f_sqrt;
  for (size_t i = begin; i < series.size(); ++i) {
    if (!(t_values[i] >= 1.0)) {
      throw InvalidArgumentError("round numbers start at 1");
    }
    f_log.push_back(std::log(t_values[i]));
    f_sqrt.push_back(std::sqrt(t_values[i]));
  }
  CurveFitReport report;
  report.log_fit = FitLinear(f_log, y);
  report.sqrt_fit = FitLinear(f_sqrt, y);
  report.winner = report.log_fit.residual_norm <= report.sqrt_fit.residual_norm
                      ? "log"
                      : "sqrt";
  report.first_t = static_cast<long>(t_values[begin]);
  report.last_t = static_cast<long>(t_values.back());
  return report;
}

}  // namespace psmrlab
