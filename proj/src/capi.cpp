// Copyright 2026 The nestedrl Authors
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

#include "nestedrl.h"

#include <cstring>
#include <string>

#include "nestedrl/arena.hpp"
#include "nestedrl/config.hpp"
#include "nestedrl/errors.hpp"
#include "nestedrl/gradcheck.hpp"
#include "nestedrl/harness.hpp"
#include "nestedrl/oracle.hpp"
#include "nestedrl/plot.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void remember(const char* message) { g_last_error = message; }

// Funnels C++ exceptions into status codes; cb returns NRL_OK on success.
template <typename Fn>
nrl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nestedrl::IllegalActionError& e) {
    remember(e.what());
    return NRL_ERR_ILLEGAL_ACTION;
  } catch (const nestedrl::ConfigError& e) {
    remember(e.what());
    return NRL_ERR_CONFIG;
  } catch (const nestedrl::ContractError& e) {
    remember(e.what());
    return NRL_ERR_CONTRACT;
  } catch (const nestedrl::TrainingError& e) {
    remember(e.what());
    return NRL_ERR_TRAINING;
  } catch (const std::exception& e) {
    remember(e.what());
    return NRL_ERR_INTERNAL;
  } catch (...) {
    remember("unknown error");
    return NRL_ERR_INTERNAL;
  }
}

nrl_status invalid(const char* message) {
  remember(message);
  return NRL_ERR_INVALID_ARGUMENT;
}

void fill_summary(const nestedrl::ExperimentResult& result,
                  nrl_run_summary* out) {
  if (!out) return;
  out->trials_done = static_cast<int>(result.curves.size());
  out->trials_failed = static_cast<int>(result.failed_trials.size());
  out->final_mean_score =
      result.summary.empty() ? 0.0 : result.summary.back().mean;
}

}  // namespace

struct nrl_config {
  nestedrl::ExperimentConfig cfg;
};

struct nrl_arena {
  nestedrl::Arena arena;
};

extern "C" {

const char* nrl_version(void) { return "1.0.0"; }

const char* nrl_last_error(void) { return g_last_error.c_str(); }

nrl_config* nrl_config_new(void) { return new nrl_config{}; }

void nrl_config_free(nrl_config* cfg) { delete cfg; }

nrl_status nrl_config_set(nrl_config* cfg, const char* key,
                          const char* value) {
  if (!cfg || !key || !value) return invalid("null argument");
  return guarded([&] {
    nestedrl::set_config_value(cfg->cfg, key, value);
    return NRL_OK;
  });
}

nrl_status nrl_config_get(const nrl_config* cfg, const char* key, char* buf,
                          size_t buf_len) {
  if (!cfg || !key || !buf || buf_len == 0) return invalid("null argument");
  return guarded([&] {
    const std::string value = nestedrl::get_config_value(cfg->cfg, key);
    if (value.size() + 1 > buf_len) {
      remember("buffer too small");
      return NRL_ERR_INVALID_ARGUMENT;
    }
    std::memcpy(buf, value.c_str(), value.size() + 1);
    return NRL_OK;
  });
}

nrl_status nrl_config_load_file(nrl_config* cfg, const char* path) {
  if (!cfg || !path) return invalid("null argument");
  return guarded([&] {
    cfg->cfg = nestedrl::load_config_file(path);
    return NRL_OK;
  });
}

nrl_status nrl_config_write_file(const nrl_config* cfg, const char* path) {
  if (!cfg || !path) return invalid("null argument");
  return guarded([&] {
    nestedrl::save_config_file(cfg->cfg, path);
    return NRL_OK;
  });
}

nrl_status nrl_run_experiment(const nrl_config* cfg, const char* out_dir,
                              nrl_run_summary* summary) {
  if (!cfg || !out_dir) return invalid("null argument");
  return guarded([&] {
    fill_summary(nestedrl::run_and_write(cfg->cfg, out_dir), summary);
    return NRL_OK;
  });
}

nrl_status nrl_run_compare(const nrl_config* cfg, const char* out_dir,
                           nrl_run_summary summaries[3]) {
  if (!cfg || !out_dir) return invalid("null argument");
  return guarded([&] {
    const auto results = nestedrl::run_compare(cfg->cfg, out_dir);
    if (summaries) {
      for (int i = 0; i < 3; ++i) fill_summary(results[i], &summaries[i]);
    }
    return NRL_OK;
  });
}

nrl_status nrl_oracle_plan(const nrl_config* cfg, nrl_oracle_result* out) {
  if (!cfg || !out) return invalid("null argument");
  return guarded([&] {
    const nestedrl::OracleResult r = nestedrl::plan_optimal(
        cfg->cfg.resolve_shape(), cfg->cfg.max_steps);
    out->max_main_reward = r.max_main_reward;
    out->max_nested_return = r.max_nested_return;
    out->min_steps = r.min_steps;
    out->optimal_material = static_cast<int>(r.optimal_material);
    out->proven = r.proven ? 1 : 0;
    return NRL_OK;
  });
}

nrl_status nrl_gradient_check(int num_nets, uint64_t seed,
                              double* max_rel_error) {
  if (!max_rel_error) return invalid("null argument");
  if (num_nets < 1) return invalid("num_nets must be positive");
  return guarded([&] {
    *max_rel_error = nestedrl::run_gradient_check(num_nets, seed).max_rel_error;
    return NRL_OK;
  });
}

nrl_status nrl_plot_curves(const char* csv_path, const char* svg_path) {
  if (!csv_path || !svg_path) return invalid("null argument");
  return guarded([&] {
    nestedrl::plot_curves_file(csv_path, svg_path);
    return NRL_OK;
  });
}

nrl_arena* nrl_arena_new(const char* scenario, const char* shape_file,
                         int max_steps, int front_cell_drop) {
  nrl_arena* out = nullptr;
  guarded([&] {
    nestedrl::ShapeSpec shape =
        (shape_file && *shape_file)
            ? nestedrl::ShapeSpec::from_mask_file(shape_file)
            : nestedrl::ShapeSpec::by_name(scenario ? scenario : "");
    nestedrl::ArenaOptions options{.max_steps = max_steps,
                                   .front_cell_drop = front_cell_drop != 0};
    out = new nrl_arena{nestedrl::Arena(std::move(shape), options)};
    return NRL_OK;
  });
  return out;
}

void nrl_arena_free(nrl_arena* arena) { delete arena; }

nrl_status nrl_arena_reset(nrl_arena* arena) {
  if (!arena) return invalid("null arena");
  arena->arena.reset();
  return NRL_OK;
}

nrl_status nrl_arena_set_material(nrl_arena* arena, int material) {
  if (!arena) return invalid("null arena");
  if (material < 0 || material >= nestedrl::kMaterialCount) {
    return invalid("material must be 0 (wood) or 1 (stone)");
  }
  return guarded([&] {
    arena->arena.set_material(static_cast<nestedrl::Material>(material));
    return NRL_OK;
  });
}

nrl_status nrl_arena_step(nrl_arena* arena, int action, int* reward,
                          int* done) {
  if (!arena) return invalid("null arena");
  if (action < 0 || action >= nestedrl::kNestedActionCount) {
    return invalid("action must lie in [0, 7]");
  }
  return guarded([&] {
    const nestedrl::StepResult sr =
        arena->arena.step(static_cast<nestedrl::NestedAction>(action));
    if (reward) *reward = sr.reward;
    if (done) *done = sr.done ? 1 : 0;
    return NRL_OK;
  });
}

nrl_status nrl_arena_observe_main(const nrl_arena* arena, double out[3]) {
  if (!arena || !out) return invalid("null argument");
  const auto obs = arena->arena.observe_main();
  for (int i = 0; i < 3; ++i) out[i] = obs[i];
  return NRL_OK;
}

nrl_status nrl_arena_observe_nested(const nrl_arena* arena, int material,
                                    double out[4]) {
  if (!arena || !out) return invalid("null argument");
  if (material < 0 || material >= nestedrl::kMaterialCount) {
    return invalid("material must be 0 (wood) or 1 (stone)");
  }
  const auto obs =
      arena->arena.observe_nested(static_cast<nestedrl::Material>(material));
  for (int i = 0; i < 4; ++i) out[i] = obs[i];
  return NRL_OK;
}

nrl_status nrl_arena_indicator_sum(const nrl_arena* arena, int* out) {
  if (!arena || !out) return invalid("null argument");
  *out = arena->arena.indicator_sum();
  return NRL_OK;
}

nrl_status nrl_arena_main_reward(const nrl_arena* arena, int* out) {
  if (!arena || !out) return invalid("null argument");
  return guarded([&] {
    *out = arena->arena.main_reward();
    return NRL_OK;
  });
}

nrl_status nrl_arena_state(const nrl_arena* arena, int* x, int* y,
                           int* blocks_remaining, int* steps_taken,
                           int* terminal) {
  if (!arena) return invalid("null arena");
  if (x) *x = arena->arena.pos().x;
  if (y) *y = arena->arena.pos().y;
  if (blocks_remaining) *blocks_remaining = arena->arena.blocks_remaining();
  if (steps_taken) *steps_taken = arena->arena.steps_taken();
  if (terminal) *terminal = arena->arena.terminal() ? 1 : 0;
  return NRL_OK;
}

}  // extern "C"
