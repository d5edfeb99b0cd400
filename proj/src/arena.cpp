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

#include "nestedrl/arena.hpp"

#include <algorithm>

#include "nestedrl/errors.hpp"

namespace nestedrl {

int material_penalty(Material m) {
  return m == Material::kWood ? -5 : 10;
}

const char* material_name(Material m) {
  return m == Material::kWood ? "wood" : "stone";
}

bool action_drops(NestedAction a) {
  return static_cast<int>(a) >= 4;
}

GridPos action_delta(NestedAction a) {
  switch (a) {
    case NestedAction::kForward:
    case NestedAction::kForwardDrop:
      return {0, 1};
    case NestedAction::kBackward:
    case NestedAction::kBackwardDrop:
      return {0, -1};
    case NestedAction::kLeft:
    case NestedAction::kLeftDrop:
      return {-1, 0};
    case NestedAction::kRight:
    case NestedAction::kRightDrop:
      return {1, 0};
  }
  return {0, 0};
}

const char* action_name(NestedAction a) {
  static const char* names[] = {"F", "B", "L", "R", "FD", "LD", "RD", "BD"};
  return names[static_cast<int>(a)];
}

Arena::Arena(ShapeSpec shape, ArenaOptions options)
    : shape_(std::move(shape)), options_(options) {
  if (options_.max_steps < 1) {
    throw ConfigError("max_steps must be at least 1");
  }
  reset();
}

void Arena::reset() {
  pos_ = {shape_.width() / 2, shape_.height() / 2};
  placed_.assign(static_cast<std::size_t>(shape_.width()) * shape_.height(),
                 0);
  placed_count_ = 0;
  material_.reset();
  blocks_remaining_ = shape_.cell_count();
  steps_taken_ = 0;
}

bool Arena::terminal() const {
  return blocks_remaining_ == 0 || steps_taken_ >= options_.max_steps;
}

void Arena::require_live(const char* what) const {
  if (terminal()) {
    throw IllegalActionError(std::string(what) +
                             " on a finished episode");
  }
}

void Arena::set_material(Material m) {
  if (material_.has_value()) {
    throw IllegalActionError("the material is fixed for the episode");
  }
  if (steps_taken_ != 0) {
    throw IllegalActionError("the material must be chosen before moving");
  }
  material_ = m;
}

StepResult Arena::step(NestedAction a) {
  if (!material_.has_value()) {
    throw IllegalActionError("cannot step before the material is chosen");
  }
  require_live("step");

  const GridPos d = action_delta(a);
  pos_.x = std::clamp(pos_.x + d.x, 0, shape_.width() - 1);
  pos_.y = std::clamp(pos_.y + d.y, 0, shape_.height() - 1);

  int reward = 0;
  if (action_drops(a)) {
    GridPos target = pos_;
    bool in_grid = true;
    if (options_.front_cell_drop) {
      target.y += 1;
      in_grid = target.y < shape_.height();
    }
    if (in_grid && !placed_[target.y * shape_.width() + target.x]) {
      placed_[target.y * shape_.width() + target.x] = 1;
      ++placed_count_;
      --blocks_remaining_;
      reward = shape_.at(target.x, target.y) ? 1 : 0;
    }
  }
  ++steps_taken_;
  return {reward, terminal()};
}

StepResult Arena::step_noop() {
  require_live("step");
  ++steps_taken_;
  return {0, terminal()};
}

int Arena::indicator_sum() const {
  int sum = 0;
  for (int y = 0; y < shape_.height(); ++y) {
    for (int x = 0; x < shape_.width(); ++x) {
      const bool k = placed_[y * shape_.width() + x] != 0;
      if (k == shape_.at(x, y)) ++sum;
    }
  }
  return sum;
}

int Arena::main_reward() const {
  if (!material_.has_value()) {
    throw ContractError("main reward needs a material");
  }
  if (!terminal()) {
    throw ContractError("main reward is only defined at episode end");
  }
  return indicator_sum() + material_penalty(*material_);
}

std::vector<double> Arena::observe_main() const {
  const double wspan = std::max(1, shape_.width() - 1);
  const double hspan = std::max(1, shape_.height() - 1);
  return {pos_.x / wspan, pos_.y / hspan,
          static_cast<double>(blocks_remaining_) / shape_.cell_count()};
}

std::vector<double> Arena::observe_nested(Material main_action) const {
  std::vector<double> obs = observe_main();
  obs.push_back(main_action == Material::kWood ? 0.0 : 1.0);
  return obs;
}

}  // namespace nestedrl
