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

#ifndef NESTEDRL_SHAPE_HPP_
#define NESTEDRL_SHAPE_HPP_

#include <string>
#include <utility>
#include <vector>

namespace nestedrl {

inline constexpr int kArenaSize = 15;

// Target design mask: which cells of the grid should end up holding a block.
class ShapeSpec {
 public:
  // Canonical scenario masks on the 15x15 arena.
  static ShapeSpec line();     // column x=7, every row
  static ShapeSpec zigzag();   // triangle wave between x=3 and x=7
  static ShapeSpec diamond();  // Manhattan ring |x-7|+|y-7| = 4

  // Scenario lookup by name ("line", "zigzag", "diamond").
  static ShapeSpec by_name(const std::string& name);

  // Parses the 15x15 mask file format: 15 lines of 15 characters, '#' for a
  // shape cell and '.' for empty. Anything else is rejected. Line k of the
  // file is row y = 14 - k, so the file reads the way the arena is drawn.
  static ShapeSpec from_mask_text(const std::string& text,
                                  const std::string& name = "custom");
  static ShapeSpec from_mask_file(const std::string& path);

  // Arbitrary-size mask from an explicit cell list (tests, mini arenas).
  static ShapeSpec custom(std::string name, int width, int height,
                          const std::vector<std::pair<int, int>>& cells);

  const std::string& name() const { return name_; }
  int width() const { return width_; }
  int height() const { return height_; }
  int cell_count() const { return cell_count_; }

  bool at(int x, int y) const { return mask_[y * width_ + x]; }

  // Shape cells in row-major order (y ascending, then x).
  std::vector<std::pair<int, int>> cells() const;

  // Inverse of from_mask_text for 15x15 shapes.
  std::string to_mask_text() const;

 private:
  ShapeSpec(std::string name, int width, int height, std::vector<char> mask);

  std::string name_;
  int width_ = 0;
  int height_ = 0;
  int cell_count_ = 0;
  std::vector<char> mask_;  // row-major, y * width + x
};

}  // namespace nestedrl

#endif  // NESTEDRL_SHAPE_HPP_
