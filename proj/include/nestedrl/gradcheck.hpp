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

#ifndef NESTEDRL_GRADCHECK_HPP_
#define NESTEDRL_GRADCHECK_HPP_

#include <cstdint>
#include <span>

#include "nestedrl/mlp.hpp"

namespace nestedrl {

// Squared TD loss on the selected action: (Q(x)[action] - td_target)^2.
double td_loss(const Mlp& net, std::span<const double> x, int action,
               double td_target);

// Central finite differences of td_loss over every parameter. Only calls
// forward, so it stays independent of the analytic backward pass it is
// used to check.
Gradients finite_difference_gradients(const Mlp& net,
                                      std::span<const double> x, int action,
                                      double td_target, double h = 1e-5);

struct GradCheckReport {
  double max_rel_error = 0.0;
  int nets_checked = 0;
};

// Compares analytic and finite-difference gradients over num_nets randomly
// drawn architectures/inputs. Relative error uses max(1, |a|, |b|) in the
// denominator so near-zero gradients compare absolutely.
GradCheckReport run_gradient_check(int num_nets, std::uint64_t seed,
                                   double h = 1e-5);

}  // namespace nestedrl

#endif  // NESTEDRL_GRADCHECK_HPP_
