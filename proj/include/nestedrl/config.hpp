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

#ifndef NESTEDRL_CONFIG_HPP_
#define NESTEDRL_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nestedrl/arena.hpp"
#include "nestedrl/ddqn.hpp"
#include "nestedrl/frameworks.hpp"
#include "nestedrl/schedule.hpp"
#include "nestedrl/shape.hpp"

namespace nestedrl {

// Everything a training run depends on. Defaults follow the reference
// setup: 3000 episodes, evaluation every 30, averaged over 10 trials,
// replay of one million, batch 32, two 32-node tanh hidden layers, epsilon
// from 1.0 with a faster decay and higher floor for the main agent.
struct ExperimentConfig {
  // experiment
  std::string scenario = "line";  // line | zigzag | diamond | custom
  FrameworkKind framework = FrameworkKind::kNested;
  int episodes = 3000;
  int eval_every = 30;
  int eval_episodes = 1;  // greedy episodes averaged per checkpoint
  int trials = 10;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out_dir = "runs";

  // arena
  int max_steps = 500;
  bool front_cell_drop = false;
  std::string shape_file;  // implies scenario = custom

  // approximator
  double learning_rate = 1e-3;
  std::vector<int> hidden_dims = {32, 32};

  // ddqn
  double gamma = 0.99;
  int tau = 100;
  int batch_size = 32;
  std::size_t replay_capacity = 1'000'000;
  int replay_warmup = 500;
  TargetRule target_rule = TargetRule::kDoubleDqn;
  double eps_start = 1.0;
  double eps_main_floor = 0.01;
  double eps_nested_floor = 0.001;
  // Unset horizons resolve to 20% (main) and 80% (nested) of the episode
  // count.
  std::optional<int> eps_main_horizon;
  std::optional<int> eps_nested_horizon;
  bool flat_literal_invalid_score = false;

  void validate() const;

  ShapeSpec resolve_shape() const;
  ArenaOptions arena_options() const;
  DdqnOptions ddqn_options() const;
  EpsilonSchedule main_schedule() const;
  EpsilonSchedule nested_schedule() const;
  SystemOptions system_options() const;
};

// Key space of the flat "section.key = value" config format; also the keys
// accepted by the shared-library setter.
void set_config_value(ExperimentConfig& cfg, const std::string& key,
                      const std::string& value);
std::string get_config_value(const ExperimentConfig& cfg,
                             const std::string& key);

// Canonical serialization: fixed section and key order, so parsing a file,
// writing it back and parsing again is a fixed point.
std::string serialize_config(const ExperimentConfig& cfg);

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);
void save_config_file(const ExperimentConfig& cfg, const std::string& path);

}  // namespace nestedrl

#endif  // NESTEDRL_CONFIG_HPP_
