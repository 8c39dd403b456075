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

// Stable C interface to the library. Every object crosses the boundary as
// an opaque handle, every call returns a status code, and structured
// results come back as JSON strings owned by the caller (release them with
// psmr_string_free).

#ifndef PSMRLAB_PSMRLAB_H_
#define PSMRLAB_PSMRLAB_H_

#include <stdint.h>

#if defined(PSMRLAB_BUILDING_LIBRARY)
#define PSMRLAB_API __attribute__((visibility("default")))
#else
#define PSMRLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psmr_status {
  PSMR_OK = 0,
  PSMR_ERR_INVALID_ARGUMENT = 1,
  PSMR_ERR_PARSE = 2,
  PSMR_ERR_VALIDATION = 3,
  PSMR_ERR_COMPATIBILITY = 4,
  PSMR_ERR_NUMERICAL = 5,
  PSMR_ERR_RUNTIME = 6,
  PSMR_ERR_INTERNAL = 7,
} psmr_status;

typedef struct psmr_game psmr_game;
typedef struct psmr_learner psmr_learner;

PSMRLAB_API const char* psmr_version(void);
PSMRLAB_API const char* psmr_status_name(psmr_status status);

// Message of the last failed call on this thread; empty after success.
PSMRLAB_API const char* psmr_last_error(void);

PSMRLAB_API void psmr_string_free(char* s);

// Games.
PSMRLAB_API psmr_status psmr_game_from_json(const char* json, psmr_game** out);
PSMRLAB_API psmr_status psmr_game_from_file(const char* path, psmr_game** out);
PSMRLAB_API psmr_status psmr_game_from_catalog(const char* id, double eps,
                                               psmr_game** out);
PSMRLAB_API psmr_status psmr_game_dims(const psmr_game* game, int* num_x,
                                       int* num_y);
PSMRLAB_API psmr_status psmr_game_utility(const psmr_game* game, int x, int y,
                                          double* out);
PSMRLAB_API psmr_status psmr_game_to_json(const psmr_game* game, char** out);
// Equilibrium report and gap profile.
PSMRLAB_API psmr_status psmr_game_analyze(const psmr_game* game, char** out);
PSMRLAB_API void psmr_game_free(psmr_game* game);

// Array of {id, provenance, game} for the built-in games at the given eps.
PSMRLAB_API psmr_status psmr_catalog_list(double eps, char** out);

// Kiefer-Wolfowitz design of an action set given as JSON text.
PSMRLAB_API psmr_status psmr_design_compute(const char* actions_json,
                                            double tol, char** out);
// Same for `num_actions` uniformly random unit vectors in R^dim.
PSMRLAB_API psmr_status psmr_design_random(int num_actions, int dim,
                                           uint64_t seed, double tol,
                                           char** out);

typedef struct psmr_run_options {
  int threads;              // <= 0 means 1; PSMRLAB_THREADS wins
  int has_seed_base;
  uint64_t seed_base;       // replaces seeds.base in count form
  int has_stride;
  long stride;              // 0 logs powers of two
  const char* output;       // CSV path, NULL keeps the spec's
} psmr_run_options;

PSMRLAB_API void psmr_run_options_init(psmr_run_options* options);

// Runs an experiment spec (JSON text). Relative game paths resolve
// against base_dir, which may be NULL.
PSMRLAB_API psmr_status psmr_experiment_run(const char* spec_json,
                                            const char* base_dir,
                                            const psmr_run_options* options,
                                            char** out);
PSMRLAB_API psmr_status psmr_experiment_run_file(
    const char* path, const psmr_run_options* options, char** out);

// Lower-bound sweep. The request is JSON:
//   {"gaps": [[dr, dc], ...], "horizon": T,
//    "seeds": n | [..] | {"count": n, "base": b},
//    "learner": {...}, "noise": "two_point"}
PSMRLAB_API psmr_status psmr_lowerbound_run(const char* request_json,
                                            const psmr_run_options* options,
                                            char** out);

// Learners driven step by step from outside.
PSMRLAB_API psmr_status psmr_learner_create(const psmr_game* game,
                                            const char* config_json,
                                            long horizon, uint64_t seed,
                                            psmr_learner** out);
PSMRLAB_API psmr_status psmr_learner_choose(psmr_learner* learner,
                                            int* action);
// opponent_action < 0 sends uninformed feedback.
PSMRLAB_API psmr_status psmr_learner_update(psmr_learner* learner, int action,
                                            double reward,
                                            int opponent_action);
PSMRLAB_API void psmr_learner_free(psmr_learner* learner);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // PSMRLAB_PSMRLAB_H_
