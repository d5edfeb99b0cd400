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

#include "nestedrl/shape.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "nestedrl/errors.hpp"

namespace nestedrl {

ShapeSpec::ShapeSpec(std::string name, int width, int height,
                     std::vector<char> mask)
    : name_(std::move(name)),
      width_(width),
      height_(height),
      mask_(std::move(mask)) {
  if (width_ < 1 || height_ < 1 ||
      mask_.size() != static_cast<std::size_t>(width_ * height_)) {
    throw ConfigError("shape mask dimensions are invalid");
  }
  for (char c : mask_) cell_count_ += c ? 1 : 0;
  if (cell_count_ < 1) {
    throw ConfigError("shape '" + name_ + "' has no cells");
  }
}

ShapeSpec ShapeSpec::line() {
  std::vector<std::pair<int, int>> cells;
  for (int y = 0; y < kArenaSize; ++y) cells.emplace_back(7, y);
  return custom("line", kArenaSize, kArenaSize, cells);
}

ShapeSpec ShapeSpec::zigzag() {
  // Triangle wave with period 8: offsets 0,1,2,3,4,3,2,1 repeating down the
  // rows, shifted to start at x=3.
  std::vector<std::pair<int, int>> cells;
  for (int y = 0; y < kArenaSize; ++y) {
    const int phase = y % 8;
    const int tri = phase <= 4 ? phase : 8 - phase;
    cells.emplace_back(3 + tri, y);
  }
  return custom("zigzag", kArenaSize, kArenaSize, cells);
}

ShapeSpec ShapeSpec::diamond() {
  std::vector<std::pair<int, int>> cells;
  for (int y = 0; y < kArenaSize; ++y) {
    for (int x = 0; x < kArenaSize; ++x) {
      if (std::abs(x - 7) + std::abs(y - 7) == 4) cells.emplace_back(x, y);
    }
  }
  return custom("diamond", kArenaSize, kArenaSize, cells);
}

ShapeSpec ShapeSpec::by_name(const std::string& name) {
  if (name == "line") return line();
  if (name == "zigzag") return zigzag();
  if (name == "diamond") return diamond();
  throw ConfigError("unknown scenario '" + name +
                    "' (expected line, zigzag or diamond)");
}

ShapeSpec ShapeSpec::custom(std::string name, int width, int height,
                            const std::vector<std::pair<int, int>>& cells) {
  if (width < 1 || height < 1) {
    throw ConfigError("shape dimensions must be positive");
  }
  std::vector<char> mask(static_cast<std::size_t>(width * height), 0);
  for (const auto& [x, y] : cells) {
    if (x < 0 || x >= width || y < 0 || y >= height) {
      throw ConfigError("shape cell out of bounds");
    }
    mask[y * width + x] = 1;
  }
  return ShapeSpec(std::move(name), width, height, std::move(mask));
}

ShapeSpec ShapeSpec::from_mask_text(const std::string& text,
                                    const std::string& name) {
  std::istringstream in(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Tolerate trailing blank lines, nothing else.
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() != kArenaSize) {
    throw ConfigError("mask file must have exactly 15 lines, got " +
                      std::to_string(lines.size()));
  }
  std::vector<char> mask(kArenaSize * kArenaSize, 0);
  for (int row = 0; row < kArenaSize; ++row) {
    const std::string& l = lines[row];
    if (l.size() != kArenaSize) {
      throw ConfigError("mask line " + std::to_string(row + 1) +
                        " must have exactly 15 characters");
    }
    const int y = kArenaSize - 1 - row;  // first file line is the top row
    for (int x = 0; x < kArenaSize; ++x) {
      if (l[x] == '#') {
        mask[y * kArenaSize + x] = 1;
      } else if (l[x] != '.') {
        throw ConfigError(std::string("invalid mask character '") + l[x] +
                          "' (only '#' and '.' are allowed)");
      }
    }
  }
  return ShapeSpec(name, kArenaSize, kArenaSize, std::move(mask));
}

ShapeSpec ShapeSpec::from_mask_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open shape file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_mask_text(buf.str(), path);
}

std::vector<std::pair<int, int>> ShapeSpec::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(cell_count_);
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (at(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::string ShapeSpec::to_mask_text() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(height_) * (width_ + 1));
  for (int y = height_ - 1; y >= 0; --y) {
    for (int x = 0; x < width_; ++x) out.push_back(at(x, y) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

}  // namespace nestedrl
