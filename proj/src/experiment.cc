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

#include "psmrlab/experiment.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>

#include "psmrlab/catalog.h"
#include "psmrlab/error.h"
#include "psmrlab/game_io.h"

namespace psmrlab {

using nlohmann::json;

namespace {

const json* Find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double NumberField(const json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError(field + ": expected a number");
  return v.get<double>();
}

long IntegerField(const json& v, const std::string& field) {
  if (v.is_number_integer()) return v.get<long>();
  // Accept 1e5 style literals when they are exact integers.
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long>(d);
  }
  throw ParseError(field + ": expected an integer");
}

std::string StringField(const json& v, const std::string& field) {
  if (!v.is_string()) throw ParseError(field + ": expected a string");
  return v.get<std::string>();
}

void RequireObject(const json& j, const std::string& field) {
  if (!j.is_object()) throw ParseError(field + ": expected an object");
}

void RejectUnknownKeys(const json& j, const std::string& field,
                       std::initializer_list<const char*> known) {
  std::set<std::string> allowed(known.begin(), known.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ParseError(field + ": unknown key '" + it.key() + "'");
    }
  }
}

// Plain decimal with full round-trip precision.
std::string FormatNumber(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// +inf has no JSON literal; report it as null.
json Finite(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json Finite(const std::optional<double>& v) {
  return v ? Finite(*v) : json(nullptr);
}

}  // namespace

std::vector<std::uint64_t> SeedSpec::Resolve() const {
  if (!explicit_seeds.empty()) return explicit_seeds;
  if (count <= 0) throw ValidationError("seeds: count must be >= 1");
  std::vector<std::uint64_t> out(count);
  for (long i = 0; i < count; ++i) out[i] = base + static_cast<std::uint64_t>(i);
  return out;
}

LearnerConfig LearnerConfigFromJson(const json& j) {
  LearnerConfig c;
  if (j.is_string()) {
    c.name = j.get<std::string>();
    return c;
  }
  RequireObject(j, "learner");
  RejectUnknownKeys(j, "learner", {"name", "params"});
  const json* name = Find(j, "name");
  if (!name) throw ParseError("learner.name: missing");
  c.name = StringField(*name, "learner.name");
  if (const json* p = Find(j, "params")) {
    RequireObject(*p, "learner.params");
    RejectUnknownKeys(*p, "learner.params",
                      {"alpha", "delta", "lambda", "kw_tol", "action"});
    if (const json* v = Find(*p, "alpha")) c.alpha = NumberField(*v, "learner.params.alpha");
    if (const json* v = Find(*p, "delta")) c.delta = NumberField(*v, "learner.params.delta");
    if (const json* v = Find(*p, "lambda")) c.lambda = NumberField(*v, "learner.params.lambda");
    if (const json* v = Find(*p, "kw_tol")) c.kw_tol = NumberField(*v, "learner.params.kw_tol");
    if (const json* v = Find(*p, "action")) {
      c.action = static_cast<int>(IntegerField(*v, "learner.params.action"));
    }
  }
  return c;
}

AdversaryConfig AdversaryConfigFromJson(const json& j) {
  AdversaryConfig c;
  if (j.is_string()) {
    c.name = j.get<std::string>();
    return c;
  }
  RequireObject(j, "adversary");
  RejectUnknownKeys(j, "adversary", {"name", "params"});
  const json* name = Find(j, "name");
  if (!name) throw ParseError("adversary.name: missing");
  c.name = StringField(*name, "adversary.name");
  if (const json* p = Find(j, "params")) {
    RequireObject(*p, "adversary.params");
    RejectUnknownKeys(*p, "adversary.params",
                      {"q", "delta_r", "delta_c", "matrix"});
    if (const json* v = Find(*p, "q")) {
      Vector q = VectorFromJson(*v, "adversary.params.q");
      c.q = std::vector<double>(q.data(), q.data() + q.size());
    }
    if (const json* v = Find(*p, "delta_r")) c.delta_r = NumberField(*v, "adversary.params.delta_r");
    if (const json* v = Find(*p, "delta_c")) c.delta_c = NumberField(*v, "adversary.params.delta_c");
    if (const json* v = Find(*p, "matrix")) {
      const std::string m = StringField(*v, "adversary.params.matrix");
      if (m != "A" && m != "B") {
        throw ParseError("adversary.params.matrix: expected \"A\" or \"B\"");
      }
      c.use_b = m == "B";
    }
  }
  return c;
}

ExperimentSpec ExperimentSpecFromJson(const json& j,
                                      const std::string& base_dir) {
  RequireObject(j, "experiment");
  RejectUnknownKeys(j, "experiment",
                    {"format_version", "experiment_id", "game", "learner",
                     "adversary", "feedback", "noise", "horizon", "seeds",
                     "output", "stride"});
  ExperimentSpec s;
  s.base_dir = base_dir;
  if (const json* v = Find(j, "format_version")) {
    s.format_version = static_cast<int>(IntegerField(*v, "format_version"));
    if (s.format_version < 1 || s.format_version > kFormatVersion) {
      throw ParseError("format_version: unsupported value " + v->dump());
    }
  }
  if (const json* v = Find(j, "experiment_id")) {
    s.experiment_id = StringField(*v, "experiment_id");
    if (s.experiment_id.find_first_of(",\n\"") != std::string::npos) {
      throw ValidationError("experiment_id: must not contain commas, quotes or newlines");
    }
  }
  if (const json* g = Find(j, "game")) {
    RequireObject(*g, "game");
    RejectUnknownKeys(*g, "game", {"catalog", "eps", "file", "inline"});
    int sources = 0;
    if (const json* v = Find(*g, "catalog")) {
      s.game.catalog_id = StringField(*v, "game.catalog");
      ++sources;
    }
    if (const json* v = Find(*g, "eps")) s.game.eps = NumberField(*v, "game.eps");
    if (const json* v = Find(*g, "file")) {
      s.game.file = StringField(*v, "game.file");
      ++sources;
    }
    if (const json* v = Find(*g, "inline")) {
      s.game.inline_game = *v;
      ++sources;
    }
    if (sources != 1) {
      throw ParseError("game: give exactly one of catalog, file, inline");
    }
  }
  const json* learner = Find(j, "learner");
  if (!learner) throw ParseError("learner: missing");
  s.learner = LearnerConfigFromJson(*learner);
  if (const json* v = Find(j, "adversary")) s.adversary = AdversaryConfigFromJson(*v);
  if (const json* v = Find(j, "feedback")) {
    s.feedback = ParseFeedbackModel(StringField(*v, "feedback"));
  }
  if (const json* v = Find(j, "noise")) {
    s.noise = ParseNoiseModel(StringField(*v, "noise"));
  }
  const json* horizon = Find(j, "horizon");
  if (!horizon) throw ParseError("horizon: missing");
  s.horizon = IntegerField(*horizon, "horizon");
  if (s.horizon <= 0) throw ValidationError("horizon: must be >= 1");
  if (const json* v = Find(j, "seeds")) {
    if (v->is_array()) {
      if (v->empty()) throw ValidationError("seeds: list is empty");
      for (size_t i = 0; i < v->size(); ++i) {
        const long seed = IntegerField((*v)[i], "seeds[" + std::to_string(i) + "]");
        if (seed < 0) throw ValidationError("seeds: must be nonnegative");
        s.seeds.explicit_seeds.push_back(static_cast<std::uint64_t>(seed));
      }
    } else if (v->is_object()) {
      RejectUnknownKeys(*v, "seeds", {"count", "base"});
      if (const json* c = Find(*v, "count")) s.seeds.count = IntegerField(*c, "seeds.count");
      if (const json* b = Find(*v, "base")) {
        const long base = IntegerField(*b, "seeds.base");
        if (base < 0) throw ValidationError("seeds.base: must be nonnegative");
        s.seeds.base = static_cast<std::uint64_t>(base);
      }
      if (s.seeds.count <= 0) throw ValidationError("seeds.count: must be >= 1");
    } else {
      s.seeds.count = IntegerField(*v, "seeds");
      if (s.seeds.count <= 0) throw ValidationError("seeds: must be >= 1");
    }
  }
  if (const json* v = Find(j, "output")) s.output = StringField(*v, "output");
  if (const json* v = Find(j, "stride")) {
    s.stride = IntegerField(*v, "stride");
    if (s.stride < 0) throw ValidationError("stride: must be >= 0");
  }
  return s;
}

ExperimentSpec ParseExperimentSpec(std::string_view text,
                                   const std::string& base_dir) {
  return ExperimentSpecFromJson(ParseJsonText(text), base_dir);
}

ExperimentSpec LoadExperimentSpec(const std::string& path) {
  const std::string dir =
      std::filesystem::path(path).parent_path().string();
  return ParseExperimentSpec(ReadTextFile(path), dir);
}

FeedbackModel DefaultFeedback(const std::string& learner_name) {
  if (learner_name == "pure_ucb" || learner_name == "pure_lin_ucb") {
    return FeedbackModel::kInformed;
  }
  return FeedbackModel::kUninformed;
}

EpisodeSetup ResolveExperiment(const ExperimentSpec& spec) {
  EpisodeSetup setup;
  const GameSource& src = spec.game;
  if (src.catalog_id) {
    setup.game = FindCatalogEntry(*src.catalog_id, src.eps).game;
  } else if (src.file) {
    std::filesystem::path p(*src.file);
    if (p.is_relative() && !spec.base_dir.empty()) p = spec.base_dir / p;
    setup.game = LoadGameFile(p.string());
  } else if (src.inline_game) {
    setup.game = GameFromJson(*src.inline_game);
  } else if (spec.adversary.name == "lower_bound") {
    if (!spec.adversary.delta_r || !spec.adversary.delta_c) {
      throw ValidationError("lower_bound adversary needs delta_r and delta_c");
    }
    setup.game = LowerBoundConstruct(*spec.adversary.delta_r,
                                     *spec.adversary.delta_c, spec.horizon,
                                     spec.adversary.use_b)
                     .game;
  } else {
    throw ValidationError("game: missing");
  }
  setup.horizon = spec.horizon;
  setup.noise = spec.noise;
  setup.feedback = spec.feedback.value_or(DefaultFeedback(spec.learner.name));
  std::unique_ptr<Learner> learner =
      MakeLearner(spec.learner, setup.game, spec.horizon);
  CheckCompatibility(*learner, setup.feedback);
  setup.learner = std::move(learner);
  setup.adversary = MakeAdversary(spec.adversary, setup.game, spec.horizon);
  return setup;
}

std::vector<long> LoggedRounds(long horizon, long stride) {
  std::vector<long> out;
  if (horizon <= 0) return out;
  if (stride <= 0) {
    for (long t = 1; t < horizon; t *= 2) out.push_back(t);
  } else {
    for (long t = stride; t < horizon; t += stride) out.push_back(t);
  }
  out.push_back(horizon);
  return out;
}

void WriteCsvRows(std::ostream& out, const std::string& experiment_id,
                  const RunResult& result, const std::vector<long>& rounds) {
  for (long t : rounds) {
    out << experiment_id << ',' << result.seed << ',' << t << ','
        << FormatNumber(result.psmr[t - 1]) << ','
        << FormatNumber(result.nr[t - 1]) << ','
        << FormatNumber(result.er[t - 1]) << '\n';
  }
}

int ResolveThreads(std::optional<int> requested) {
  if (const char* env = std::getenv("PSMRLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) {
      throw ValidationError(std::string("PSMRLAB_THREADS: expected a positive "
                                        "integer, got '") + env + "'");
    }
    return static_cast<int>(v);
  }
  if (requested) {
    if (*requested < 1) throw ValidationError("threads must be >= 1");
    return *requested;
  }
  return 1;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec_in,
                               const RunOptions& options) {
  ExperimentSpec spec = spec_in;
  if (options.output) spec.output = *options.output;
  if (options.stride) {
    if (*options.stride < 0) throw ValidationError("stride must be >= 0");
    spec.stride = *options.stride;
  }
  if (options.seed_base && spec.seeds.explicit_seeds.empty()) {
    spec.seeds.base = *options.seed_base;
  }

  ExperimentResult result;
  result.experiment_id = spec.experiment_id;
  result.setup = ResolveExperiment(spec);
  result.seeds = spec.seeds.Resolve();

  std::ofstream csv;
  std::string tmp_path;
  if (spec.output && !spec.output->empty()) {
    // Written to a sibling file and renamed once every episode finished.
    tmp_path = *spec.output + ".partial";
    csv.open(tmp_path, std::ios::trunc);
    if (!csv) throw RuntimeError("cannot write '" + *spec.output + "'");
    csv << kCsvHeader << '\n';
  }
  const std::vector<long> rounds = LoggedRounds(spec.horizon, spec.stride);

  BatchOptions batch_options;
  batch_options.threads = ResolveThreads(options.threads);
  if (csv.is_open()) {
    batch_options.observer = [&](const RunResult& r) {
      WriteCsvRows(csv, spec.experiment_id, r, rounds);
      result.csv_rows += static_cast<long>(rounds.size());
    };
  }
  try {
    result.batch = RunBatch(result.setup, result.seeds, batch_options);
  } catch (...) {
    if (csv.is_open()) {
      csv.close();
      std::filesystem::remove(tmp_path);
    }
    throw;
  }
  if (csv.is_open()) {
    csv.close();
    if (!csv) throw RuntimeError("failed writing '" + *spec.output + "'");
    std::filesystem::rename(tmp_path, *spec.output);
    result.csv_path = *spec.output;
  }
  if (spec.horizon >= 10) result.psmr_fit = CurveFit(result.batch.psmr.mean);
  return result;
}

LowerBoundReport RunLowerBound(double delta_r, double delta_c, long horizon,
                               const std::vector<std::uint64_t>& seeds,
                               const LearnerConfig& learner,
                               NoiseModel noise, int threads) {
  LowerBoundReport report;
  report.delta_r = delta_r;
  report.delta_c = delta_c;
  report.horizon = horizon;
  report.num_seeds = static_cast<long>(seeds.size());
  report.learner = learner.name;
  report.theoretical_scale =
      std::min(1.0 / (delta_r * delta_c), std::sqrt(static_cast<double>(horizon)));

  for (bool use_b : {false, true}) {
    LowerBoundInstance inst =
        LowerBoundConstruct(delta_r, delta_c, horizon, use_b);
    EpisodeSetup setup;
    setup.game = inst.game;
    setup.horizon = horizon;
    setup.noise = noise;
    setup.feedback = DefaultFeedback(learner.name);
    setup.learner = MakeLearner(learner, setup.game, horizon);
    setup.adversary = std::make_shared<LowerBoundAdversary>(inst.params);
    BatchOptions opts;
    opts.threads = threads;
    BatchResult batch = RunBatch(setup, seeds, opts);
    LowerBoundArm& arm = use_b ? report.arm_b : report.arm_a;
    arm.params = inst.params;
    arm.mean_psmr = batch.psmr.mean.back();
    arm.sd_psmr = batch.psmr.sd.back();
    arm.ci95_half = batch.psmr.ci95_half.back();
  }
  const bool b_wins = report.arm_b.mean_psmr > report.arm_a.mean_psmr;
  report.max_mean_psmr = b_wins ? report.arm_b.mean_psmr : report.arm_a.mean_psmr;
  report.max_matrix = b_wins ? "B" : "A";
  return report;
}

SweepReport RunLowerBoundSweep(
    const std::vector<std::pair<double, double>>& gaps, long horizon,
    const std::vector<std::uint64_t>& seeds, const LearnerConfig& learner,
    NoiseModel noise, int threads) {
  SweepReport sweep;
  bool all_ran = true;
  for (const auto& [dr, dc] : gaps) {
    SweepEntry e;
    e.delta_r = dr;
    e.delta_c = dc;
    try {
      e.report = RunLowerBound(dr, dc, horizon, seeds, learner, noise, threads);
    } catch (const ValidationError& err) {
      e.error = err.what();
      all_ran = false;
    }
    sweep.entries.push_back(std::move(e));
  }
  sweep.strictly_increasing = all_ran && !sweep.entries.empty();
  for (size_t i = 1; all_ran && i < sweep.entries.size(); ++i) {
    if (!(sweep.entries[i].report->max_mean_psmr >
          sweep.entries[i - 1].report->max_mean_psmr)) {
      sweep.strictly_increasing = false;
    }
  }
  return sweep;
}

json AnalysisToJson(const BilinearGame& game) {
  const EquilibriumReport rep = Analyze(game);
  const GapProfile gaps = ComputeGapProfile(game, rep);
  json psne = json::array();
  for (const PsnePair& p : rep.psne) {
    psne.push_back({{"x", p.x}, {"y", p.y}, {"strict", p.strict}});
  }
  json out;
  out["format_version"] = kFormatVersion;
  out["type"] = game.type() == GameType::kNormal ? "normal" : "bilinear";
  out["num_x"] = game.num_x();
  out["num_y"] = game.num_y();
  out["equilibrium"] = {
      {"psne", psne},
      {"has_psne", rep.has_psne()},
      {"has_strict_psne", rep.has_strict_psne()},
      {"v_star", rep.v_star},
      {"maximin_row", rep.maximin_row},
      {"minimax_col", rep.minimax_col},
      {"v_mix", rep.v_mix},
      {"p_star", VectorToJson(rep.p_star.weights())},
      {"q_star", VectorToJson(rep.q_star.weights())},
  };
  json g;
  if (gaps.anchor) {
    g["anchor"] = {{"x", gaps.anchor->x}, {"y", gaps.anchor->y},
                   {"strict", gaps.anchor->strict}};
    g["delta_r"] = VectorToJson(gaps.delta_r);
    g["delta_c"] = VectorToJson(gaps.delta_c);
  } else {
    g["anchor"] = nullptr;
  }
  g["delta_r_min"] = Finite(gaps.delta_r_min);
  g["delta_c_min"] = Finite(gaps.delta_c_min);
  g["delta_mix"] = gaps.delta_mix;
  g["delta_xy"] = MatrixToJson(gaps.delta_xy);
  g["delta_lin"] = Finite(gaps.delta_lin);
  g["delta_entry"] = Finite(gaps.delta_entry);
  out["gaps"] = g;
  return out;
}

json DesignToJson(const ExplorationDesign& design, const ActionSet& actions) {
  json support = json::array();
  for (int i = 0; i < design.p0.size(); ++i) {
    if (design.p0[i] > 1e-12) {
      json e = {{"index", i}, {"weight", design.p0[i]}};
      if (!actions.labels().empty()) e["label"] = actions.labels()[i];
      support.push_back(e);
    }
  }
  return {{"format_version", kFormatVersion},
          {"dim", actions.dim()},
          {"num_actions", actions.size()},
          {"weights", VectorToJson(design.p0.weights())},
          {"support", support},
          {"max_leverage", design.max_leverage},
          {"c_achieved", design.c_achieved},
          {"iterations", design.iterations}};
}

json CurveFitToJson(const CurveFitReport& fit) {
  auto model = [](const ModelFit& m) {
    return json{{"a", m.a}, {"b", m.b}, {"residual_norm", m.residual_norm}};
  };
  return {{"log", model(fit.log_fit)},
          {"sqrt", model(fit.sqrt_fit)},
          {"winner", fit.winner},
          {"first_t", fit.first_t},
          {"last_t", fit.last_t}};
}

json ExperimentResultToJson(const ExperimentResult& r) {
  const BatchResult& b = r.batch;
  auto final_stats = [](const SeriesStats& s) {
    return json{{"mean", s.mean.back()},
                {"sd", s.sd.back()},
                {"ci95_half", s.ci95_half.back()}};
  };
  json episodes = json::array();
  for (const EpisodeSummary& e : b.episodes) {
    json row = {{"seed", e.seed}, {"psmr", e.psmr}, {"nr", e.nr}, {"er", e.er}};
    if (e.deviation_count) row["deviation_count"] = *e.deviation_count;
    episodes.push_back(row);
  }
  json out = {{"format_version", kFormatVersion},
              {"experiment_id", r.experiment_id},
              {"learner", r.setup.learner->name()},
              {"adversary", r.setup.adversary->name()},
              {"feedback", FeedbackModelName(r.setup.feedback)},
              {"noise", NoiseModelName(r.setup.noise)},
              {"horizon", b.horizon},
              {"num_seeds", r.seeds.size()},
              {"psmr", final_stats(b.psmr)},
              {"nr", final_stats(b.nr)},
              {"er", final_stats(b.er)},
              {"episodes", episodes}};
  out["psmr_fit"] = r.psmr_fit ? CurveFitToJson(*r.psmr_fit) : json(nullptr);
  out["csv"] = r.csv_path ? json(*r.csv_path) : json(nullptr);
  out["csv_rows"] = r.csv_rows;
  return out;
}

namespace {

json ArmToJson(const LowerBoundArm& a) {
  const LowerBoundParams& p = a.params;
  return {{"matrix", p.use_b ? "B" : "A"},
          {"case", p.case_one ? 1 : 2},
          {"K", p.k},
          {"eps", p.eps},
          {"t_prime", p.t_prime},
          {"divergence", p.Divergence()},
          {"mean_psmr", a.mean_psmr},
          {"sd_psmr", a.sd_psmr},
          {"ci95_half", a.ci95_half}};
}

}  // namespace

json LowerBoundReportToJson(const LowerBoundReport& r) {
  return {{"delta_r", r.delta_r},
          {"delta_c", r.delta_c},
          {"horizon", r.horizon},
          {"num_seeds", r.num_seeds},
          {"learner", r.learner},
          {"A", ArmToJson(r.arm_a)},
          {"B", ArmToJson(r.arm_b)},
          {"max_mean_psmr", r.max_mean_psmr},
          {"max_matrix", r.max_matrix},
          {"theoretical_scale", r.theoretical_scale}};
}

json SweepReportToJson(const SweepReport& sweep) {
  json entries = json::array();
  for (const SweepEntry& e : sweep.entries) {
    if (e.report) {
      entries.push_back(LowerBoundReportToJson(*e.report));
    } else {
      entries.push_back({{"delta_r", e.delta_r},
                         {"delta_c", e.delta_c},
                         {"error", e.error.value_or("")}});
    }
  }
  return {{"format_version", kFormatVersion},
          {"entries", entries},
          {"strictly_increasing", sweep.strictly_increasing}};
}

}  // namespace psmrlab
