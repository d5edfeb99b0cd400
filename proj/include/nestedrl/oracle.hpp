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

#ifndef NESTEDRL_ORACLE_HPP_
#define NESTEDRL_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "nestedrl/arena.hpp"
#include "nestedrl/schedule.hpp"
#include "nestedrl/shape.hpp"

namespace nestedrl {

struct OracleResult {
  int max_main_reward = 0;
  int max_nested_return = 0;
  int min_steps = 0;  // fewest steps that realize max_nested_return
  Material optimal_material = Material::kStone;
  // False when the search budget ran out; the values are then the best
  // bounds found, not a proven optimum.
  bool proven = true;
};

// Exhaustive search over block-placement orders: depth-first branch and
// bound with a nearest-neighbor lower bound. One action moves one cell and
// optionally drops, so the cost between placements is the Manhattan
// distance; optimal plans never drop off-shape or on an occupied cell.
// Stone dominates wood unless a material is forced.
OracleResult plan_optimal(const ShapeSpec& shape, int max_steps,
                          std::optional<Material> forced_material = {},
                          std::uint64_t node_budget = 50'000'000);

// Tabular Q-values over the discrete state (x, y, blocks_remaining).
class TabularQ {
 public:
  TabularQ(double alpha, double gamma,
           int action_count = kNestedActionCount);

  struct State {
    int x = 0;
    int y = 0;
    int b = 0;
    bool operator==(const State&) const = default;
  };

  double q(const State& s, int action) const;
  void set_q(const State& s, int action, double value);
  double max_q(const State& s) const;
  int greedy_action(const State& s) const;  // ties toward the lowest index

  // One Q-learning update:
  //   Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)),
  // with no bootstrap term on terminal transitions.
  void update(const State& s, int action, double r, const State& s_next,
              bool done);

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  std::size_t states_visited() const { return table_.size(); }

 private:
  static std::int64_t key(const State& s) {
    return (static_cast<std::int64_t>(s.b) * 64 + s.y) * 64 + s.x;
  }

  double alpha_;
  double gamma_;
  int action_count_;
  std::unordered_map<std::int64_t, std::vector<double>> table_;
};

struct TabularRunResult {
  TabularQ table;
  int greedy_return = 0;  // undiscounted reward sum of one greedy rollout
  int greedy_steps = 0;
};

// Q-learning on a mini arena small enough to enumerate (at most 7x7 cells
// and 5 shape cells). The material is fixed for every episode; the learner
// sees the per-step placement rewards.
TabularRunResult tabular_q_learn(const ShapeSpec& mini_shape, int max_steps,
                                 int episodes, double alpha, double gamma,
                                 const EpsilonSchedule& eps_schedule,
                                 std::uint64_t seed,
                                 Material material = Material::kStone);

}  // namespace nestedrl

#endif  // NESTEDRL_ORACLE_HPP_
