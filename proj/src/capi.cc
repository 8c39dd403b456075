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

#include "psmrlab/psmrlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "psmrlab/catalog.h"
#include "psmrlab/design.h"
#include "psmrlab/error.h"
#include "psmrlab/experiment.h"
#include "psmrlab/game_io.h"
#include "psmrlab/learners.h"
#include "psmrlab/rng.h"

struct psmr_game {
  psmrlab::BilinearGame game;
};

struct psmr_learner {
  std::unique_ptr<psmrlab::Learner> learner;
  psmrlab::Rng rng;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

psmr_status Fail(psmr_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename F>
psmr_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return PSMR_OK;
  } catch (const psmrlab::Error& e) {
    return Fail(static_cast<psmr_status>(e.kind()), e.what());
  } catch (const json::exception& e) {
    return Fail(PSMR_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(PSMR_ERR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return Fail(PSMR_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(PSMR_ERR_INTERNAL, "unknown error");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void RequireOut(const void* p) {
  if (!p) throw psmrlab::InvalidArgumentError("null output pointer");
}

void RequireText(const char* s, const char* what) {
  if (!s) throw psmrlab::InvalidArgumentError(std::string(what) + " is null");
}

psmrlab::RunOptions ToRunOptions(const psmr_run_options* o) {
  psmrlab::RunOptions out;
  if (!o) return out;
  if (o->threads > 0) out.threads = o->threads;
  if (o->has_seed_base) out.seed_base = o->seed_base;
  if (o->has_stride) out.stride = o->stride;
  if (o->output) out.output = std::string(o->output);
  return out;
}

}  // namespace

extern "C" {

const char* psmr_version(void) { return "0.1.0"; }

const char* psmr_status_name(psmr_status status) {
  switch (status) {
    case PSMR_OK: return "ok";
    case PSMR_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case PSMR_ERR_PARSE: return "parse";
    case PSMR_ERR_VALIDATION: return "validation";
    case PSMR_ERR_COMPATIBILITY: return "compatibility";
    case PSMR_ERR_NUMERICAL: return "numerical";
    case PSMR_ERR_RUNTIME: return "runtime";
    case PSMR_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* psmr_last_error(void) { return last_error.c_str(); }

void psmr_string_free(char* s) { std::free(s); }

psmr_status psmr_game_from_json(const char* text, psmr_game** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(text, "game json");
    *out = new psmr_game{psmrlab::ParseGame(text)};
  });
}

psmr_status psmr_game_from_file(const char* path, psmr_game** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(path, "path");
    *out = new psmr_game{psmrlab::LoadGameFile(path)};
  });
}

psmr_status psmr_game_from_catalog(const char* id, double eps,
                                   psmr_game** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(id, "catalog id");
    *out = new psmr_game{psmrlab::FindCatalogEntry(id, eps).game};
  });
}

psmr_status psmr_game_dims(const psmr_game* game, int* num_x, int* num_y) {
  return Guard([&] {
    RequireOut(game);
    if (num_x) *num_x = game->game.num_x();
    if (num_y) *num_y = game->game.num_y();
  });
}

psmr_status psmr_game_utility(const psmr_game* game, int x, int y,
                              double* out) {
  return Guard([&] {
    RequireOut(game);
    RequireOut(out);
    if (x < 0 || x >= game->game.num_x() || y < 0 || y >= game->game.num_y()) {
      throw psmrlab::InvalidArgumentError("action index out of range");
    }
    *out = game->game.utilities()(x, y);
  });
}

psmr_status psmr_game_to_json(const psmr_game* game, char** out) {
  return Guard([&] {
    RequireOut(game);
    RequireOut(out);
    *out = CopyString(psmrlab::SerializeGame(game->game));
  });
}

psmr_status psmr_game_analyze(const psmr_game* game, char** out) {
  return Guard([&] {
    RequireOut(game);
    RequireOut(out);
    *out = CopyString(psmrlab::AnalysisToJson(game->game).dump(2));
  });
}

void psmr_game_free(psmr_game* game) { delete game; }

psmr_status psmr_catalog_list(double eps, char** out) {
  return Guard([&] {
    RequireOut(out);
    json list = json::array();
    for (const psmrlab::GameCatalogEntry& e : psmrlab::Catalog(eps)) {
      list.push_back({{"id", e.id},
                      {"provenance", e.provenance},
                      {"game", psmrlab::GameToJson(e.game)}});
    }
    *out = CopyString(list.dump(2));
  });
}

psmr_status psmr_design_compute(const char* actions_json, double tol,
                                char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(actions_json, "actions json");
    psmrlab::ActionSet actions =
        psmrlab::ActionSetFromJson(psmrlab::ParseJsonText(actions_json));
    psmrlab::ExplorationDesign d = psmrlab::KieferWolfowitzDesign(actions, tol);
    *out = CopyString(psmrlab::DesignToJson(d, actions).dump(2));
  });
}

psmr_status psmr_design_random(int num_actions, int dim, uint64_t seed,
                               double tol, char** out) {
  return Guard([&] {
    RequireOut(out);
    if (num_actions < 1 || dim < 1) {
      throw psmrlab::InvalidArgumentError("need at least one action and dimension");
    }
    psmrlab::Rng rng(seed, psmrlab::Stream::kAux);
    std::vector<psmrlab::Vector> vectors;
    for (int i = 0; i < num_actions; ++i) {
      psmrlab::Vector v(dim);
      for (int k = 0; k < dim; ++k) v[k] = rng.Normal();
      vectors.push_back(v / v.norm());
    }
    psmrlab::ActionSet actions(std::move(vectors));
    psmrlab::ExplorationDesign d = psmrlab::KieferWolfowitzDesign(actions, tol);
    *out = CopyString(psmrlab::DesignToJson(d, actions).dump(2));
  });
}

void psmr_run_options_init(psmr_run_options* options) {
  if (!options) return;
  options->threads = 0;
  options->has_seed_base = 0;
  options->seed_base = 0;
  options->has_stride = 0;
  options->stride = 0;
  options->output = nullptr;
}

psmr_status psmr_experiment_run(const char* spec_json, const char* base_dir,
                                const psmr_run_options* options, char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(spec_json, "spec json");
    psmrlab::ExperimentSpec spec =
        psmrlab::ParseExperimentSpec(spec_json, base_dir ? base_dir : "");
    psmrlab::ExperimentResult r =
        psmrlab::RunExperiment(spec, ToRunOptions(options));
    *out = CopyString(psmrlab::ExperimentResultToJson(r).dump(2));
  });
}

psmr_status psmr_experiment_run_file(const char* path,
                                     const psmr_run_options* options,
                                     char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(path, "path");
    psmrlab::ExperimentSpec spec = psmrlab::LoadExperimentSpec(path);
    psmrlab::ExperimentResult r =
        psmrlab::RunExperiment(spec, ToRunOptions(options));
    *out = CopyString(psmrlab::ExperimentResultToJson(r).dump(2));
  });
}

psmr_status psmr_lowerbound_run(const char* request_json,
                                const psmr_run_options* options, char** out) {
  return Guard([&] {
    RequireOut(out);
    RequireText(request_json, "request json");
    const json req = psmrlab::ParseJsonText(request_json);
    if (!req.is_object()) throw psmrlab::ParseError("request: expected an object");
    std::vector<std::pair<double, double>> gaps;
    const json& g = req.at("gaps");
    if (!g.is_array() || g.empty()) {
      throw psmrlab::ParseError("gaps: expected a nonempty array of pairs");
    }
    for (const json& pair : g) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number()) {
        throw psmrlab::ParseError("gaps: each entry must be [delta_r, delta_c]");
      }
      gaps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    // Reuse the experiment parser for the shared fields.
    json spec = {{"horizon", req.at("horizon")},
                 {"learner", req.value("learner", json("tsallis_inf"))}};
    if (req.contains("seeds")) spec["seeds"] = req["seeds"];
    if (req.contains("noise")) spec["noise"] = req["noise"];
    psmrlab::ExperimentSpec parsed = psmrlab::ExperimentSpecFromJson(spec);
    psmrlab::RunOptions run = ToRunOptions(options);
    if (run.seed_base && parsed.seeds.explicit_seeds.empty()) {
      parsed.seeds.base = *run.seed_base;
    }
    psmrlab::SweepReport sweep = psmrlab::RunLowerBoundSweep(
        gaps, parsed.horizon, parsed.seeds.Resolve(), parsed.learner,
        parsed.noise, psmrlab::ResolveThreads(run.threads));
    *out = CopyString(psmrlab::SweepReportToJson(sweep).dump(2));
  });
}

psmr_status psmr_learner_create(const psmr_game* game, const char* config_json,
                                long horizon, uint64_t seed,
                                psmr_learner** out) {
  return Guard([&] {
    RequireOut(game);
    RequireOut(out);
    RequireText(config_json, "learner config");
    psmrlab::LearnerConfig config =
        psmrlab::LearnerConfigFromJson(psmrlab::ParseJsonText(config_json));
    *out = new psmr_learner{psmrlab::MakeLearner(config, game->game, horizon),
                            psmrlab::Rng(seed, psmrlab::Stream::kLearner)};
  });
}

psmr_status psmr_learner_choose(psmr_learner* learner, int* action) {
  return Guard([&] {
    RequireOut(learner);
    RequireOut(action);
    *action = learner->learner->Choose(learner->rng);
  });
}

psmr_status psmr_learner_update(psmr_learner* learner, int action,
                                double reward, int opponent_action) {
  return Guard([&] {
    RequireOut(learner);
    learner->learner->Update(
        action, opponent_action < 0
                    ? psmrlab::Feedback::Uninformed(reward)
                    : psmrlab::Feedback::Informed(reward, opponent_action));
  });
}

void psmr_learner_free(psmr_learner* learner) { delete learner; }

}  // extern "C"
