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

#ifndef NESTEDRL_REPLAY_HPP_
#define NESTEDRL_REPLAY_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "nestedrl/errors.hpp"
#include "nestedrl/rng.hpp"

namespace nestedrl {

struct Transition {
  std::vector<double> s;
  int a = 0;
  double r = 0.0;
  std::vector<double> s_next;
  bool done = false;
};

// FIFO ring of transitions; once full, each insert evicts the oldest.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw ConfigError("replay capacity must be positive");
  }

  void push(Transition t) {
    if (storage_.size() < capacity_) {
      storage_.push_back(std::move(t));
    } else {
      storage_[head_] = std::move(t);
      head_ = (head_ + 1) % capacity_;
    }
  }

  std::size_t size() const { return storage_.size(); }
  std::size_t capacity() const { return capacity_; }

  // Logical indexing, oldest first.
  const Transition& at(std::size_t i) const {
    return storage_[(head_ + i) % storage_.size()];
  }

  const Transition& sample(Rng& rng) const {
    return storage_[rng.uniform_int(static_cast<int>(storage_.size()))];
  }

 private:
  std::size_t capacity_;
  std::size_t head_ = 0;  // next eviction slot once the ring is full
  std::vector<Transition> storage_;
};

}  // namespace nestedrl

#endif  // NESTEDRL_REPLAY_HPP_
