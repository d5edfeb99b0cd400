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

#include "nestedrl/frameworks.hpp"

#include "nestedrl/errors.hpp"

namespace nestedrl {

namespace {

constexpr int kMainObsDim = 3;
constexpr int kNestedObsDim = 4;
constexpr int kFlatActionCount = kMaterialCount + kNestedActionCount;

void require_fresh(const Arena& arena) {
  if (arena.steps_taken() != 0 || arena.material().has_value() ||
      arena.placed_count() != 0) {
    throw ContractError("episode needs a freshly reset arena");
  }
}

}  // namespace

const char* framework_name(FrameworkKind kind) {
  switch (kind) {
    case FrameworkKind::kNested:
      return "nested";
    case FrameworkKind::kHierarchical:
      return "hierarchical";
    case FrameworkKind::kFlat:
      return "flat";
  }
  return "?";
}

FrameworkKind framework_by_name(const std::string& name) {
  if (name == "nested") return FrameworkKind::kNested;
  if (name == "hierarchical") return FrameworkKind::kHierarchical;
  if (name == "flat") return FrameworkKind::kFlat;
  throw ConfigError("unknown framework '" + name +
                    "' (expected nested, hierarchical or flat)");
}

NestedAgentSystem::NestedAgentSystem(const DdqnOptions& options,
                                     EpsilonSchedule main_schedule,
                                     EpsilonSchedule nested_schedule, Rng& rng)
    : main_(kMainObsDim, kMaterialCount, options, rng),
      nested_(kNestedObsDim, kNestedActionCount, options, rng),
      main_schedule_(main_schedule),
      nested_schedule_(nested_schedule) {}

EpisodeResult NestedAgentSystem::run_episode(Arena& arena, int episode_index,
                                             bool train, Rng& rng) {
  require_fresh(arena);
  const double eps_main = train ? main_schedule_.value(episode_index) : 0.0;
  const double eps_nested =
      train ? nested_schedule_.value(episode_index) : 0.0;

  const std::vector<double> s_main = arena.observe_main();
  const int a_main = main_.act(s_main, eps_main, rng);
  const Material material = static_cast<Material>(a_main);
  arena.set_material(material);

  EpisodeResult result;
  result.material_chosen = material;
  bool done = arena.terminal();
  while (!done) {
    const std::vector<double> s = arena.observe_nested(material);
    const int a = nested_.act(s, eps_nested, rng);
    const StepResult sr = arena.step(static_cast<NestedAction>(a));
    result.nested_return += sr.reward;
    done = sr.done;
    if (train) {
      nested_.push_transition({s, a, static_cast<double>(sr.reward),
                               arena.observe_nested(material), done});
      nested_.train_step(rng);
    }
  }

  result.score = arena.main_reward();
  result.steps = arena.steps_taken();
  if (train) {
    // One episodic transition for the main agent, trained on the final
    // build score.
    main_.push_transition({s_main, a_main, static_cast<double>(result.score),
                           arena.observe_main(), true});
    main_.train_step(rng);
  }
  return result;
}

HierarchicalAgentSystem::HierarchicalAgentSystem(const DdqnOptions& options,
                                                 EpsilonSchedule top_schedule,
                                                 EpsilonSchedule low_schedule,
                                                 Rng& rng)
    : top_(kMainObsDim, kMaterialCount, options, rng),
      low_wood_(kMainObsDim, kNestedActionCount, options, rng),
      low_stone_(kMainObsDim, kNestedActionCount, options, rng),
      top_schedule_(top_schedule),
      low_schedule_(low_schedule) {}

EpisodeResult HierarchicalAgentSystem::run_episode(Arena& arena,
                                                   int episode_index,
                                                   bool train, Rng& rng) {
  require_fresh(arena);
  const double eps_top = train ? top_schedule_.value(episode_index) : 0.0;
  const double eps_low = train ? low_schedule_.value(episode_index) : 0.0;

  const std::vector<double> s_top = arena.observe_main();
  const int pick = top_.act(s_top, eps_top, rng);
  const Material material = static_cast<Material>(pick);
  DdqnLearner& low = low_learner(pick);
  arena.set_material(material);

  EpisodeResult result;
  result.material_chosen = material;
  bool done = arena.terminal();
  while (!done) {
    const std::vector<double> s = arena.observe_main();
    const int a = low.act(s, eps_low, rng);
    const StepResult sr = arena.step(static_cast<NestedAction>(a));
    result.nested_return += sr.reward;
    done = sr.done;
    if (train) {
      low.push_transition({s, a, static_cast<double>(sr.reward),
                           arena.observe_main(), done});
      low.train_step(rng);
    }
  }

  result.score = arena.main_reward();
  result.steps = arena.steps_taken();
  if (train) {
    top_.push_transition({s_top, pick, static_cast<double>(result.score),
                          arena.observe_main(), true});
    top_.train_step(rng);
  }
  return result;
}

FlatAgentSystem::FlatAgentSystem(const DdqnOptions& options,
                                 EpsilonSchedule schedule, Rng& rng,
                                 FlatAgentOptions flat_options)
    : agent_(kMainObsDim, kFlatActionCount, options, rng),
      schedule_(schedule),
      flat_options_(flat_options) {}

EpisodeResult FlatAgentSystem::run_episode(Arena& arena, int episode_index,
                                           bool train, Rng& rng) {
  require_fresh(arena);
  const double eps = train ? schedule_.value(episode_index) : 0.0;

  EpisodeResult result;
  std::vector<double> s = arena.observe_main();
  int a = agent_.act(s, eps, rng);
  ++result.steps;

  if (a >= kMaterialCount) {
    // The material decision is time-sensitive: anything else first ends the
    // episode on the spot.
    result.score =
        flat_options_.literal_invalid_score ? arena.indicator_sum() : 0;
    if (train) {
      agent_.push_transition({s, a, static_cast<double>(result.score),
                              arena.observe_main(), true});
      agent_.train_step(rng);
    }
    return result;
  }

  const Material material = static_cast<Material>(a);
  arena.set_material(material);
  result.material_chosen = material;
  if (train) {
    agent_.push_transition({s, a, 0.0, arena.observe_main(), false});
    agent_.train_step(rng);
  }

  bool done = arena.terminal();
  while (!done) {
    s = arena.observe_main();
    a = agent_.act(s, eps, rng);
    ++result.steps;
    // Repeated material picks burn a step and change nothing else.
    const StepResult sr =
        a < kMaterialCount
            ? arena.step_noop()
            : arena.step(static_cast<NestedAction>(a - kMaterialCount));
    result.nested_return += sr.reward;
    done = sr.done;
    double reward = sr.reward;
    if (done) {
      result.score = arena.main_reward();
      // The single reward stream has to carry the episodic build score too.
      reward += result.score;
    }
    if (train) {
      agent_.push_transition({s, a, reward, arena.observe_main(), done});
      agent_.train_step(rng);
    }
  }
  return result;
}

std::unique_ptr<AgentSystem> make_system(FrameworkKind kind,
                                         const SystemOptions& options,
                                         Rng& rng) {
  switch (kind) {
    case FrameworkKind::kNested:
      return std::make_unique<NestedAgentSystem>(
          options.ddqn, options.main_schedule, options.nested_schedule, rng);
    case FrameworkKind::kHierarchical:
      return std::make_unique<HierarchicalAgentSystem>(
          options.ddqn, options.main_schedule, options.nested_schedule, rng);
    case FrameworkKind::kFlat:
      return std::make_unique<FlatAgentSystem>(options.ddqn,
                                               options.nested_schedule, rng,
                                               options.flat);
  }
  throw ConfigError("unknown framework kind");
}

}  // namespace nestedrl
