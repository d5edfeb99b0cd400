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

#ifndef NESTEDRL_ARENA_HPP_
#define NESTEDRL_ARENA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nestedrl/shape.hpp"

namespace nestedrl {

// Episode-long building material, committed once at episode start.
enum class Material { kWood = 0, kStone = 1 };

// Constant added to the final build score: wood is cheap but penalized,
// stone is rewarded.
int material_penalty(Material m);

const char* material_name(Material m);

struct GridPos {
  int x = 0;
  int y = 0;
  bool operator==(const GridPos&) const = default;
};

// Low-level action set: four moves plus four move-and-drop variants.
enum class NestedAction {
  kForward = 0,       // +y
  kBackward = 1,      // -y
  kLeft = 2,          // -x
  kRight = 3,         // +x
  kForwardDrop = 4,
  kLeftDrop = 5,
  kRightDrop = 6,
  kBackwardDrop = 7,
};

inline constexpr int kNestedActionCount = 8;
inline constexpr int kMaterialCount = 2;

bool action_drops(NestedAction a);
GridPos action_delta(NestedAction a);
const char* action_name(NestedAction a);

struct StepResult {
  int reward = 0;  // 0 or 1: indicator of a block landing on a shape cell
  bool done = false;
};

struct ArenaOptions {
  int max_steps = 500;
  // When set, a drop lands one cell ahead (+y) of the agent instead of on
  // the agent's own cell; drops aimed past the boundary do nothing.
  bool front_cell_drop = false;
};

// Deterministic block-building grid world. One episode: fix a material,
// move around placing blocks until the budget runs out or the step cap is
// hit. The placement grid K never un-sets a cell, and every consumed block
// is on the grid: sum(K) + blocks_remaining == initial budget.
class Arena {
 public:
  explicit Arena(ShapeSpec shape, ArenaOptions options = {});

  // Back to the initial state: centered agent, empty grid, material unset,
  // full block budget (one block per shape cell).
  void reset();

  // Commits the episode material. Only legal on a fresh episode; the
  // material cannot be changed afterwards.
  void set_material(Material m);

  // Applies one nested action: move (clamped to the grid), then optionally
  // drop a block on the target cell. Dropping on an occupied cell consumes
  // nothing and earns nothing. Reward is 1 iff a block lands on a shape
  // cell. Requires the material to be set and the episode to be live.
  StepResult step(NestedAction a);

  // Advances the step counter without touching the grid. Used by the flat
  // framework for actions that have no environment effect.
  StepResult step_noop();

  // Number of cells where the placement grid agrees with the shape mask,
  // counted over the whole grid (matching empty cells count too).
  int indicator_sum() const;

  // Final build score: indicator_sum plus the material penalty. Only
  // defined on a finished episode with a material chosen.
  int main_reward() const;

  // Observations, all components normalized into [0, 1].
  // Main: [x, y, budget fraction]. Nested: main plus the material code.
  std::vector<double> observe_main() const;
  std::vector<double> observe_nested(Material main_action) const;

  const ShapeSpec& shape() const { return shape_; }
  const ArenaOptions& options() const { return options_; }
  GridPos pos() const { return pos_; }
  std::optional<Material> material() const { return material_; }
  int blocks_remaining() const { return blocks_remaining_; }
  int initial_budget() const { return shape_.cell_count(); }
  int steps_taken() const { return steps_taken_; }
  bool terminal() const;
  bool placed(int x, int y) const { return placed_[y * shape_.width() + x]; }
  int placed_count() const { return placed_count_; }

 private:
  void require_live(const char* what) const;

  ShapeSpec shape_;
  ArenaOptions options_;
  GridPos pos_;
  std::vector<char> placed_;  // the K matrix, row-major
  int placed_count_ = 0;
  std::optional<Material> material_;
  int blocks_remaining_ = 0;
  int steps_taken_ = 0;
};

}  // namespace nestedrl

#endif  // NESTEDRL_ARENA_HPP_
