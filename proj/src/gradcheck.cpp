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

#include "nestedrl/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "nestedrl/rng.hpp"

namespace nestedrl {

double td_loss(const Mlp& net, std::span<const double> x, int action,
               double td_target) {
  const double q = net.forward(x)[action];
  const double r = q - td_target;
  return r * r;
}

Gradients finite_difference_gradients(const Mlp& net,
                                      std::span<const double> x, int action,
                                      double td_target, double h) {
  Mlp probe = net;
  Gradients fd = net.zero_gradients();
  for (int l = 0; l < net.layer_count(); ++l) {
    for (std::size_t i = 0; i < net.weights(l).size(); ++i) {
      const double saved = probe.weights(l)[i];
      probe.weights(l)[i] = saved + h;
      const double lp = td_loss(probe, x, action, td_target);
      probe.weights(l)[i] = saved - h;
      const double lm = td_loss(probe, x, action, td_target);
      probe.weights(l)[i] = saved;
      fd.weights[l][i] = (lp - lm) / (2.0 * h);
    }
    for (std::size_t i = 0; i < net.biases(l).size(); ++i) {
      const double saved = probe.biases(l)[i];
      probe.biases(l)[i] = saved + h;
      const double lp = td_loss(probe, x, action, td_target);
      probe.biases(l)[i] = saved - h;
      const double lm = td_loss(probe, x, action, td_target);
      probe.biases(l)[i] = saved;
      fd.biases[l][i] = (lp - lm) / (2.0 * h);
    }
  }
  return fd;
}

namespace {

double rel_error(double a, double b) {
  return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)});
}

double max_rel_error(const Gradients& a, const Gradients& b) {
  double worst = 0.0;
  for (std::size_t l = 0; l < a.weights.size(); ++l) {
    for (std::size_t i = 0; i < a.weights[l].size(); ++i) {
      worst = std::max(worst, rel_error(a.weights[l][i], b.weights[l][i]));
    }
    for (std::size_t i = 0; i < a.biases[l].size(); ++i) {
      worst = std::max(worst, rel_error(a.biases[l][i], b.biases[l][i]));
    }
  }
  return worst;
}

}  // namespace

GradCheckReport run_gradient_check(int num_nets, std::uint64_t seed,
                                   double h) {
  Rng rng(seed);
  GradCheckReport report;
  for (int k = 0; k < num_nets; ++k) {
    std::vector<int> dims;
    dims.push_back(1 + rng.uniform_int(5));
    const int hidden_layers = 1 + rng.uniform_int(2);
    for (int l = 0; l < hidden_layers; ++l) dims.push_back(2 + rng.uniform_int(7));
    dims.push_back(2 + rng.uniform_int(7));

    Mlp net(dims, rng);
    std::vector<double> x(dims.front());
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    const int action = rng.uniform_int(dims.back());
    const double td_target = rng.uniform(-2.0, 2.0);

    Mlp::Workspace ws;
    net.forward_cached(x, ws);
    Gradients analytic = net.zero_gradients();
    net.accumulate_gradients(ws, action, td_target, 1.0, analytic);
    const Gradients fd =
        finite_difference_gradients(net, x, action, td_target, h);

    report.max_rel_error =
        std::max(report.max_rel_error, max_rel_error(analytic, fd));
    ++report.nets_checked;
  }
  return report;
}

}  // namespace nestedrl
