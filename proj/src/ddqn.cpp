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

#include "nestedrl/ddqn.hpp"

#include <algorithm>
#include <cmath>

#include "nestedrl/errors.hpp"

namespace nestedrl {

int argmax_index(std::span<const double> values) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

namespace {

std::vector<int> full_dims(int input_dim, int action_count,
                           const std::vector<int>& hidden) {
  std::vector<int> dims;
  dims.push_back(input_dim);
  dims.insert(dims.end(), hidden.begin(), hidden.end());
  dims.push_back(action_count);
  return dims;
}

}  // namespace

DdqnLearner::DdqnLearner(int input_dim, int action_count,
                         const DdqnOptions& options, Rng& rng)
    : action_count_(action_count),
      options_(options),
      online_(full_dims(input_dim, action_count, options.hidden_dims), rng),
      target_(online_),
      replay_(options.replay_capacity),
      optimizer_(online_, options.learning_rate) {
  if (options_.gamma < 0.0 || options_.gamma > 1.0) {
    throw ConfigError("gamma must lie in [0, 1]");
  }
  if (options_.target_sync_period < 1) {
    throw ConfigError("target sync period must be positive");
  }
  if (options_.batch_size < 1) throw ConfigError("batch size must be positive");
  grads_ = online_.zero_gradients();
}

int DdqnLearner::act(std::span<const double> obs, double eps, Rng& rng) const {
  if (eps > 0.0 && rng.uniform() < eps) {
    return rng.uniform_int(action_count_);
  }
  return argmax_index(online_.forward(obs));
}

double DdqnLearner::target_for(const Transition& t) const {
  if (t.done) return t.r;
  const std::vector<double> q_target = target_.forward(t.s_next);
  int next_action;
  if (options_.target_rule == TargetRule::kDoubleDqn) {
    next_action = argmax_index(online_.forward(t.s_next));
  } else {
    next_action = argmax_index(q_target);
  }
  return t.r + options_.gamma * q_target[next_action];
}

std::vector<double> DdqnLearner::compute_targets(
    std::span<const Transition> batch) const {
  if (batch.empty()) throw ContractError("target batch is empty");
  std::vector<double> out;
  out.reserve(batch.size());
  for (const Transition& t : batch) out.push_back(target_for(t));
  return out;
}

std::optional<double> DdqnLearner::train_step(Rng& rng) {
  const std::size_t needed = std::max<std::size_t>(
      options_.batch_size, static_cast<std::size_t>(options_.replay_warmup));
  if (replay_.size() < needed) return std::nullopt;

  grads_.zero();
  const double scale = 1.0 / options_.batch_size;
  double loss = 0.0;
  for (int k = 0; k < options_.batch_size; ++k) {
    const Transition& t = replay_.sample(rng);
    const double y = target_for(t);
    online_.forward_cached(t.s, ws_);
    const double residual = ws_.post.back()[t.a] - y;
    loss += residual * residual;
    online_.accumulate_gradients(ws_, t.a, y, scale, grads_);
  }
  loss *= scale;
  if (!std::isfinite(loss)) throw TrainingError("non-finite training loss");
  optimizer_.apply(online_, grads_);

  ++step_counter_;
  if (step_counter_ % options_.target_sync_period == 0) sync_target();
  return loss;
}

}  // namespace nestedrl
