/* Copyright 2026 The nestedrl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the nestedrl shared library. Handles are opaque; every
 * fallible call returns a status code and leaves a human-readable message
 * in nrl_last_error() (thread-local) on failure.
 */

#ifndef NESTEDRL_H_
#define NESTEDRL_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nrl_status {
  NRL_OK = 0,
  NRL_ERR_INVALID_ARGUMENT = 1, /* null handle, bad enum value, ... */
  NRL_ERR_CONFIG = 2,           /* bad option values or malformed files */
  NRL_ERR_ILLEGAL_ACTION = 3,   /* environment contract violated */
  NRL_ERR_CONTRACT = 4,         /* API precondition violated */
  NRL_ERR_TRAINING = 5,         /* non-finite values during optimization */
  NRL_ERR_INTERNAL = 6
} nrl_status;

const char* nrl_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* nrl_last_error(void);

/* ---------------------------------------------------------------- config */

typedef struct nrl_config nrl_config;

nrl_config* nrl_config_new(void);
void nrl_config_free(nrl_config* cfg);

/* Keys are "section.key" as in the config file format, e.g. "ddqn.gamma". */
nrl_status nrl_config_set(nrl_config* cfg, const char* key, const char* value);
nrl_status nrl_config_get(const nrl_config* cfg, const char* key, char* buf,
                          size_t buf_len);
nrl_status nrl_config_load_file(nrl_config* cfg, const char* path);
nrl_status nrl_config_write_file(const nrl_config* cfg, const char* path);

/* ----------------------------------------------------------- experiments */

typedef struct nrl_run_summary {
  int trials_done;         /* trials that finished */
  int trials_failed;       /* trials dropped for non-finite training values */
  double final_mean_score; /* cross-trial mean at the last checkpoint */
} nrl_run_summary;

/* Trains one framework per the config and writes curves.csv / summary.csv
 * into out_dir (created if missing). summary may be NULL. */
nrl_status nrl_run_experiment(const nrl_config* cfg, const char* out_dir,
                              nrl_run_summary* summary);

/* Runs nested, hierarchical and flat on the configured scenario and writes
 * combined CSVs. summaries, when given, receives one entry per framework in
 * that order. */
nrl_status nrl_run_compare(const nrl_config* cfg, const char* out_dir,
                           nrl_run_summary summaries[3]);

/* ---------------------------------------------------------------- oracle */

typedef struct nrl_oracle_result {
  int max_main_reward;
  int max_nested_return;
  int min_steps;
  int optimal_material; /* 0 = wood, 1 = stone */
  int proven;           /* 0 when the search budget ran out */
} nrl_oracle_result;

/* Planner bounds for the scenario/shape configured in cfg. */
nrl_status nrl_oracle_plan(const nrl_config* cfg, nrl_oracle_result* out);

/* ----------------------------------------------------------- diagnostics */

/* Compares analytic backprop gradients against central finite differences
 * over num_nets random networks; writes the worst relative error. */
nrl_status nrl_gradient_check(int num_nets, uint64_t seed,
                              double* max_rel_error);

/* ------------------------------------------------------------------ plot */

nrl_status nrl_plot_curves(const char* csv_path, const char* svg_path);

/* ----------------------------------------------------------------- arena */

typedef struct nrl_arena nrl_arena;

/* scenario: "line", "zigzag" or "diamond"; pass NULL with a shape_file for
 * a custom mask. front_cell_drop nonzero drops one cell ahead of the agent.
 * Returns NULL on error (see nrl_last_error). */
nrl_arena* nrl_arena_new(const char* scenario, const char* shape_file,
                         int max_steps, int front_cell_drop);
void nrl_arena_free(nrl_arena* arena);

nrl_status nrl_arena_reset(nrl_arena* arena);
nrl_status nrl_arena_set_material(nrl_arena* arena, int material);

/* action: 0=F 1=B 2=L 3=R 4=FD 5=LD 6=RD 7=BD. reward/done may be NULL. */
nrl_status nrl_arena_step(nrl_arena* arena, int action, int* reward,
                          int* done);

nrl_status nrl_arena_observe_main(const nrl_arena* arena, double out[3]);
nrl_status nrl_arena_observe_nested(const nrl_arena* arena, int material,
                                    double out[4]);
nrl_status nrl_arena_indicator_sum(const nrl_arena* arena, int* out);

/* Final build score; only valid once the episode is over. */
nrl_status nrl_arena_main_reward(const nrl_arena* arena, int* out);

/* Any output pointer may be NULL. */
nrl_status nrl_arena_state(const nrl_arena* arena, int* x, int* y,
                           int* blocks_remaining, int* steps_taken,
                           int* terminal);

#ifdef __cplusplus
}
#endif

#endif /* NESTEDRL_H_ */
