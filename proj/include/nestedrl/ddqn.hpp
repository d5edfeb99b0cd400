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

#ifndef NESTEDRL_DDQN_HPP_
#define NESTEDRL_DDQN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nestedrl/mlp.hpp"
#include "nestedrl/replay.hpp"
#include "nestedrl/rng.hpp"

namespace nestedrl {

// Bootstrap target variants. The double-DQN rule lets the online network
// pick the successor action and the target network score it; the plain DQN
// rule takes the target network's own maximum.
enum class TargetRule { kDoubleDqn, kDqn };

struct DdqnOptions {
  double gamma = 0.99;
  int target_sync_period = 100;  // learner steps between target syncs
  int batch_size = 32;
  std::size_t replay_capacity = 1'000'000;
  int replay_warmup = 500;  // transitions required before training starts
  double learning_rate = 1e-3;
  TargetRule target_rule = TargetRule::kDoubleDqn;
  std::vector<int> hidden_dims = {32, 32};
};

// One Q-learner: online network, periodically synced target copy, replay
// buffer and optimizer. Single execution context per instance.
class DdqnLearner {
 public:
  DdqnLearner(int input_dim, int action_count, const DdqnOptions& options,
              Rng& rng);

  // Epsilon-greedy action: uniform with probability eps, otherwise the
  // online argmax with ties broken toward the lowest index. A greedy call
  // (eps == 0) draws nothing from the RNG.
  int act(std::span<const double> obs, double eps, Rng& rng) const;

  // Bootstrapped regression target for one stored transition; terminal
  // transitions use the bare reward.
  double target_for(const Transition& t) const;
  std::vector<double> compute_targets(std::span<const Transition> batch) const;

  void push_transition(Transition t) { replay_.push(std::move(t)); }

  // One uniform-with-replacement minibatch and one optimizer step. Returns
  // the mean squared TD error, or nothing while the replay is below the
  // warmup threshold (the buffer and parameters are untouched then).
  std::optional<double> train_step(Rng& rng);

  void sync_target() { target_ = online_; }

  int action_count() const { return action_count_; }
  const DdqnOptions& options() const { return options_; }
  const Mlp& online() const { return online_; }
  Mlp& online() { return online_; }
  const Mlp& target() const { return target_; }
  Mlp& target() { return target_; }
  ReplayBuffer& replay() { return replay_; }
  const ReplayBuffer& replay() const { return replay_; }
  std::int64_t step_counter() const { return step_counter_; }

 private:
  int action_count_;
  DdqnOptions options_;
  Mlp online_;
  Mlp target_;
  ReplayBuffer replay_;
  AdamOptimizer optimizer_;
  std::int64_t step_counter_ = 0;

  // Scratch for train_step.
  Mlp::Workspace ws_;
  Gradients grads_;
};

// Lowest-index argmax.
int argmax_index(std::span<const double> values);

}  // namespace nestedrl

#endif  // NESTEDRL_DDQN_HPP_
