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

#include "nestedrl/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "nestedrl/errors.hpp"
#include "nestedrl/rng.hpp"

namespace nestedrl {

namespace {

constexpr int kInfSteps = std::numeric_limits<int>::max() / 4;

struct PlannerGraph {
  // dist[i][j]: steps between placement cells; start_dist[i]: steps from the
  // spawn cell to the first placement on cell i. A placement on the spawn
  // cell itself costs 2 as the first stop (step out, drop on re-entry).
  std::vector<std::vector<int>> dist;
  std::vector<int> start_dist;
  int n = 0;
};

PlannerGraph build_graph(const ShapeSpec& shape) {
  PlannerGraph g;
  const auto cells = shape.cells();
  g.n = static_cast<int>(cells.size());
  const int sx = shape.width() / 2;
  const int sy = shape.height() / 2;
  g.dist.assign(g.n, std::vector<int>(g.n, 0));
  g.start_dist.assign(g.n, 0);
  for (int i = 0; i < g.n; ++i) {
    const auto [xi, yi] = cells[i];
    const int d = std::abs(xi - sx) + std::abs(yi - sy);
    g.start_dist[i] = d == 0 ? 2 : d;
    for (int j = 0; j < g.n; ++j) {
      const auto [xj, yj] = cells[j];
      g.dist[i][j] = std::abs(xi - xj) + std::abs(yi - yj);
    }
  }
  return g;
}

class PlacementSearch {
 public:
  PlacementSearch(const PlannerGraph& g, int step_cap,
                  std::uint64_t node_budget)
      : g_(g), step_cap_(step_cap), nodes_left_(node_budget) {}

  // Minimal steps to place exactly m blocks, or kInfSteps when it cannot be
  // done within the step cap.
  int min_steps_for(int m) {
    best_ = kInfSteps;
    target_ = m;
    if (m == 0) return 0;
    seed_upper_bound(m);
    for (int first = 0; first < g_.n; ++first) {
      const int c = g_.start_dist[first];
      if (c > step_cap_) continue;
      visited_ = std::uint32_t{1} << first;
      descend(first, c, 1);
    }
    return best_;
  }

  bool budget_exhausted() const { return nodes_left_ == 0; }

 private:
  // Greedy nearest-neighbor walk; gives the branch and bound a finite
  // incumbent to prune against.
  void seed_upper_bound(int m) {
    std::uint32_t visited = 0;
    int cost = 0;
    int cur = -1;
    for (int k = 0; k < m; ++k) {
      int pick = -1;
      int pick_d = kInfSteps;
      for (int i = 0; i < g_.n; ++i) {
        if (visited & (std::uint32_t{1} << i)) continue;
        const int d = cur < 0 ? g_.start_dist[i] : g_.dist[cur][i];
        if (d < pick_d) {
          pick_d = d;
          pick = i;
        }
      }
      cost += pick_d;
      visited |= std::uint32_t{1} << pick;
      cur = pick;
    }
    if (cost <= step_cap_) best_ = cost;
  }

  void descend(int cur, int cost, int placed) {
    if (nodes_left_ == 0) return;
    --nodes_left_;
    if (placed == target_) {
      best_ = std::min(best_, cost);
      return;
    }
    const int remaining = target_ - placed;
    int nearest = kInfSteps;
    for (int i = 0; i < g_.n; ++i) {
      if (visited_ & (std::uint32_t{1} << i)) continue;
      nearest = std::min(nearest, g_.dist[cur][i]);
    }
    // Admissible bound: reach the nearest unplaced cell, then at least one
    // step per further placement.
    if (cost + nearest + (remaining - 1) >= std::min(best_, step_cap_ + 1)) {
      return;
    }
    for (int i = 0; i < g_.n; ++i) {
      if (visited_ & (std::uint32_t{1} << i)) continue;
      const int c = cost + g_.dist[cur][i];
      if (c > step_cap_) continue;
      visited_ |= std::uint32_t{1} << i;
      descend(i, c, placed + 1);
      visited_ &= ~(std::uint32_t{1} << i);
    }
  }

  const PlannerGraph& g_;
  int step_cap_;
  std::uint64_t nodes_left_;
  std::uint32_t visited_ = 0;
  int best_ = kInfSteps;
  int target_ = 0;
};

}  // namespace

OracleResult plan_optimal(const ShapeSpec& shape, int max_steps,
                          std::optional<Material> forced_material,
                          std::uint64_t node_budget) {
  if (max_steps < 1) throw ConfigError("max_steps must be at least 1");
  if (shape.cell_count() > 30) {
    throw ConfigError("planner handles at most 30 shape cells");
  }

  const PlannerGraph graph = build_graph(shape);
  PlacementSearch search(graph, max_steps, node_budget);

  int placements = 0;
  int steps = 0;
  for (int m = graph.n; m >= 0; --m) {
    const int s = search.min_steps_for(m);
    if (s <= max_steps) {
      placements = m;
      steps = s;
      break;
    }
  }

  const Material material = forced_material.value_or(Material::kStone);
  const int grid_cells = shape.width() * shape.height();
  OracleResult result;
  result.max_nested_return = placements;
  result.min_steps = steps;
  result.max_main_reward = grid_cells - (shape.cell_count() - placements) +
                           material_penalty(material);
  result.optimal_material = material;
  result.proven = !search.budget_exhausted();
  return result;
}

TabularQ::TabularQ(double alpha, double gamma, int action_count)
    : alpha_(alpha), gamma_(gamma), action_count_(action_count) {
  if (action_count_ < 1) throw ConfigError("need at least one action");
}

double TabularQ::q(const State& s, int action) const {
  const auto it = table_.find(key(s));
  return it == table_.end() ? 0.0 : it->second[action];
}

void TabularQ::set_q(const State& s, int action, double value) {
  auto& row = table_[key(s)];
  if (row.empty()) row.assign(action_count_, 0.0);
  row[action] = value;
}

double TabularQ::max_q(const State& s) const {
  const auto it = table_.find(key(s));
  if (it == table_.end()) return 0.0;
  return *std::max_element(it->second.begin(), it->second.end());
}

int TabularQ::greedy_action(const State& s) const {
  const auto it = table_.find(key(s));
  if (it == table_.end()) return 0;
  int best = 0;
  for (int a = 1; a < action_count_; ++a) {
    if (it->second[a] > it->second[best]) best = a;
  }
  return best;
}

void TabularQ::update(const State& s, int action, double r,
                      const State& s_next, bool done) {
  auto& row = table_[key(s)];
  if (row.empty()) row.assign(action_count_, 0.0);
  const double bootstrap = done ? 0.0 : gamma_ * max_q(s_next);
  row[action] += alpha_ * (r + bootstrap - row[action]);
}

TabularRunResult tabular_q_learn(const ShapeSpec& mini_shape, int max_steps,
                                 int episodes, double alpha, double gamma,
                                 const EpsilonSchedule& eps_schedule,
                                 std::uint64_t seed, Material material) {
  if (mini_shape.width() > 7 || mini_shape.height() > 7) {
    throw ConfigError("tabular learning needs a grid of at most 7x7");
  }
  if (mini_shape.cell_count() > 5) {
    throw ConfigError("tabular learning needs at most 5 shape cells");
  }

  Rng rng(seed);
  Arena arena(mini_shape, ArenaOptions{.max_steps = max_steps});
  TabularRunResult result{TabularQ(alpha, gamma), 0, 0};
  TabularQ& table = result.table;

  const auto observe = [&]() {
    return TabularQ::State{arena.pos().x, arena.pos().y,
                           arena.blocks_remaining()};
  };

  for (int e = 0; e < episodes; ++e) {
    arena.reset();
    arena.set_material(material);
    const double eps = eps_schedule.value(e);
    bool done = arena.terminal();
    while (!done) {
      const TabularQ::State s = observe();
      int a;
      if (eps > 0.0 && rng.uniform() < eps) {
        a = rng.uniform_int(kNestedActionCount);
      } else {
        a = table.greedy_action(s);
      }
      const StepResult sr = arena.step(static_cast<NestedAction>(a));
      table.update(s, a, sr.reward, observe(), sr.done);
      done = sr.done;
    }
  }

  // Greedy rollout with learning switched off.
  arena.reset();
  arena.set_material(material);
  bool done = arena.terminal();
  while (!done) {
    const StepResult sr = arena.step(
        static_cast<NestedAction>(table.greedy_action(observe())));
    result.greedy_return += sr.reward;
    ++result.greedy_steps;
    done = sr.done;
  }
  return result;
}

}  // namespace nestedrl
