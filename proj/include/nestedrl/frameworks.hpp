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

#ifndef NESTEDRL_FRAMEWORKS_HPP_
#define NESTEDRL_FRAMEWORKS_HPP_

#include <memory>
#include <optional>
#include <string>

#include "nestedrl/arena.hpp"
#include "nestedrl/ddqn.hpp"
#include "nestedrl/schedule.hpp"

namespace nestedrl {

enum class FrameworkKind { kNested, kHierarchical, kFlat };

const char* framework_name(FrameworkKind kind);
FrameworkKind framework_by_name(const std::string& name);

struct EpisodeResult {
  int score = 0;          // final build score; 0 when no material was chosen
  int nested_return = 0;  // sum of per-step placement rewards
  int steps = 0;          // actions taken by the stepping agent
  std::optional<Material> material_chosen;
};

// Common interface of the three architectures under comparison. An episode
// drives a freshly reset arena to termination; with train=false it runs
// greedily and leaves every learner untouched.
class AgentSystem {
 public:
  virtual ~AgentSystem() = default;
  virtual EpisodeResult run_episode(Arena& arena, int episode_index,
                                    bool train, Rng& rng) = 0;
  // Number of networks (equivalently, optimizers) this system trains.
  virtual int trainable_network_count() const = 0;
};

// Two learners. The main agent commits the material once per episode; the
// nested agent acts every step on the main observation extended by the
// main agent's action.
class NestedAgentSystem : public AgentSystem {
 public:
  NestedAgentSystem(const DdqnOptions& options, EpsilonSchedule main_schedule,
                    EpsilonSchedule nested_schedule, Rng& rng);

  EpisodeResult run_episode(Arena& arena, int episode_index, bool train,
                            Rng& rng) override;
  int trainable_network_count() const override { return 2; }

  DdqnLearner& main_learner() { return main_; }
  DdqnLearner& nested_learner() { return nested_; }

 private:
  DdqnLearner main_;
  DdqnLearner nested_;
  EpsilonSchedule main_schedule_;
  EpsilonSchedule nested_schedule_;
};

// Three learners. The top agent selects one of two material-bound low-level
// agents; only the selected one acts and trains during the episode, and its
// observations carry no information about the top-level choice.
class HierarchicalAgentSystem : public AgentSystem {
 public:
  HierarchicalAgentSystem(const DdqnOptions& options,
                          EpsilonSchedule top_schedule,
                          EpsilonSchedule low_schedule, Rng& rng);

  EpisodeResult run_episode(Arena& arena, int episode_index, bool train,
                            Rng& rng) override;
  int trainable_network_count() const override { return 3; }

  DdqnLearner& top_learner() { return top_; }
  DdqnLearner& low_learner(int i) { return i == 0 ? low_wood_ : low_stone_; }

 private:
  DdqnLearner top_;
  DdqnLearner low_wood_;
  DdqnLearner low_stone_;
  EpsilonSchedule top_schedule_;
  EpsilonSchedule low_schedule_;
};

struct FlatAgentOptions {
  // When an episode dies on a material-less first action, score it with the
  // bare empty-grid indicator sum instead of zero.
  bool literal_invalid_score = false;
};

// One learner over the union action set: indices 0..1 pick the material,
// 2..9 map onto the movement actions. Choosing anything but a material
// first kills the episode; choosing a material later is a wasted step.
class FlatAgentSystem : public AgentSystem {
 public:
  FlatAgentSystem(const DdqnOptions& options, EpsilonSchedule schedule,
                  Rng& rng, FlatAgentOptions flat_options = {});

  EpisodeResult run_episode(Arena& arena, int episode_index, bool train,
                            Rng& rng) override;
  int trainable_network_count() const override { return 1; }

  DdqnLearner& learner() { return agent_; }

 private:
  DdqnLearner agent_;
  EpsilonSchedule schedule_;
  FlatAgentOptions flat_options_;
};

struct SystemOptions {
  DdqnOptions ddqn;
  EpsilonSchedule main_schedule;
  EpsilonSchedule nested_schedule;
  FlatAgentOptions flat;
};

std::unique_ptr<AgentSystem> make_system(FrameworkKind kind,
                                         const SystemOptions& options,
                                         Rng& rng);

}  // namespace nestedrl

#endif  // NESTEDRL_FRAMEWORKS_HPP_
