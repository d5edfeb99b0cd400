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

#ifndef NESTEDRL_SCHEDULE_HPP_
#define NESTEDRL_SCHEDULE_HPP_

#include "nestedrl/errors.hpp"

namespace nestedrl {

// Linear exploration decay over episodes: start at episode 0, floor from
// decay_horizon onwards.
class EpsilonSchedule {
 public:
  EpsilonSchedule(double start, double floor, int decay_horizon)
      : start_(start), floor_(floor), decay_horizon_(decay_horizon) {
    if (!(start_ >= floor_ && floor_ >= 0.0)) {
      throw ConfigError("epsilon schedule needs start >= floor >= 0");
    }
    if (decay_horizon_ < 1) {
      throw ConfigError("epsilon decay horizon must be at least 1 episode");
    }
  }

  double value(int episode) const {
    if (episode >= decay_horizon_) return floor_;
    const double frac = static_cast<double>(episode) / decay_horizon_;
    const double eps = start_ - (start_ - floor_) * frac;
    return eps < floor_ ? floor_ : eps;
  }

  double start() const { return start_; }
  double floor() const { return floor_; }
  int decay_horizon() const { return decay_horizon_; }

 private:
  double start_;
  double floor_;
  int decay_horizon_;
};

}  // namespace nestedrl

#endif  // NESTEDRL_SCHEDULE_HPP_
