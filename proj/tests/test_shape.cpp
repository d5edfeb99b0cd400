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

#include <doctest.h>

#include <string>

#include "nestedrl/errors.hpp"
#include "nestedrl/shape.hpp"

using namespace nestedrl;

TEST_CASE("canonical masks have the documented cell counts") {
  CHECK(ShapeSpec::line().cell_count() == 15);
  CHECK(ShapeSpec::zigzag().cell_count() == 15);
  CHECK(ShapeSpec::diamond().cell_count() == 16);
}

TEST_CASE("line occupies column x=7") {
  const ShapeSpec line = ShapeSpec::line();
  for (int y = 0; y < 15; ++y) {
    for (int x = 0; x < 15; ++x) {
      CHECK(line.at(x, y) == (x == 7));
    }
  }
}

TEST_CASE("zigzag has one cell per row between x=3 and x=7") {
  const ShapeSpec zig = ShapeSpec::zigzag();
  for (int y = 0; y < 15; ++y) {
    int count = 0;
    for (int x = 0; x < 15; ++x) {
      if (zig.at(x, y)) {
        ++count;
        CHECK(x >= 3);
        CHECK(x <= 7);
      }
    }
    CHECK(count == 1);
  }
  // Wave turns at the extremes.
  CHECK(zig.at(3, 0));
  CHECK(zig.at(7, 4));
  CHECK(zig.at(3, 8));
  CHECK(zig.at(7, 12));
}

TEST_CASE("diamond is the Manhattan ring of radius 4") {
  const ShapeSpec d = ShapeSpec::diamond();
  for (const auto& [x, y] : d.cells()) {
    CHECK(std::abs(x - 7) + std::abs(y - 7) == 4);
  }
}

TEST_CASE("mask text round-trips through the parser") {
  for (const ShapeSpec& s :
       {ShapeSpec::line(), ShapeSpec::zigzag(), ShapeSpec::diamond()}) {
    const ShapeSpec parsed = ShapeSpec::from_mask_text(s.to_mask_text());
    CHECK(parsed.cell_count() == s.cell_count());
    for (int y = 0; y < 15; ++y) {
      for (int x = 0; x < 15; ++x) CHECK(parsed.at(x, y) == s.at(x, y));
    }
  }
}

TEST_CASE("parser rejects malformed masks") {
  std::string good = ShapeSpec::line().to_mask_text();
  CHECK_NOTHROW(ShapeSpec::from_mask_text(good));

  SUBCASE("wrong character") {
    good[0] = 'x';
    CHECK_THROWS_AS(ShapeSpec::from_mask_text(good), ConfigError);
  }
  SUBCASE("short line") {
    CHECK_THROWS_AS(ShapeSpec::from_mask_text(good.substr(1)), ConfigError);
  }
  SUBCASE("missing line") {
    const std::string fourteen = good.substr(good.find('\n') + 1);
    CHECK_THROWS_AS(ShapeSpec::from_mask_text(fourteen), ConfigError);
  }
  SUBCASE("empty mask has no cells") {
    std::string empty;
    for (int i = 0; i < 15; ++i) empty += "...............\n";
    CHECK_THROWS_AS(ShapeSpec::from_mask_text(empty), ConfigError);
  }
}

TEST_CASE("first mask line is the top row") {
  std::string text;
  text += "#..............\n";  // y = 14
  for (int i = 0; i < 14; ++i) text += "...............\n";
  // All-dots rows would make the mask empty; put the single cell on top.
  const ShapeSpec s =
      ShapeSpec::from_mask_text(text.substr(0, 16 * 15));
  CHECK(s.cell_count() == 1);
  CHECK(s.at(0, 14));
}

TEST_CASE("custom masks validate bounds") {
  CHECK_THROWS_AS(ShapeSpec::custom("bad", 5, 5, {{5, 0}}), ConfigError);
  CHECK_THROWS_AS(ShapeSpec::custom("bad", 0, 5, {}), ConfigError);
  const ShapeSpec mini = ShapeSpec::custom("mini", 5, 5, {{2, 1}, {2, 2}});
  CHECK(mini.cell_count() == 2);
  CHECK(mini.width() == 5);
}
