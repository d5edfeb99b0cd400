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

#ifndef NESTEDRL_ERRORS_HPP_
#define NESTEDRL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nestedrl {

// An action that the environment forbids in its current state (stepping a
// finished episode, changing the material after it is fixed).
class IllegalActionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid configuration: bad option values, malformed mask or config files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an API precondition (querying a reward before the episode
// is over, mismatched dimensions).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Non-finite numbers surfaced during optimization; the owning trial is
// expected to abort and report.
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nestedrl

#endif  // NESTEDRL_ERRORS_HPP_
