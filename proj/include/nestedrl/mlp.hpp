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

#ifndef NESTEDRL_MLP_HPP_
#define NESTEDRL_MLP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nestedrl/rng.hpp"

namespace nestedrl {

// Per-layer parameter gradients, same shapes as the network they belong to.
struct Gradients {
  std::vector<std::vector<double>> weights;
  std::vector<std::vector<double>> biases;

  void zero();
};

// Feed-forward Q-value network: tanh hidden layers, identity output,
// double precision throughout. Value semantics: copying a network copies
// its parameters, which is exactly what target-network syncing needs.
class Mlp {
 public:
  // Seed-deterministic init: weights uniform in +-sqrt(6/(fan_in+fan_out)),
  // biases zero.
  Mlp(std::vector<int> layer_dims, Rng& rng);

  // All-zero parameters (handy for building constant-output networks).
  static Mlp zeros(std::vector<int> layer_dims);

  const std::vector<int>& layer_dims() const { return layer_dims_; }
  int input_dim() const { return layer_dims_.front(); }
  int output_dim() const { return layer_dims_.back(); }

  std::vector<double> forward(std::span<const double> x) const;

  // Reusable buffers for the training path so per-step work is allocation
  // free once warmed up.
  struct Workspace {
    std::vector<std::vector<double>> pre;   // pre[l]: linear output of layer l
    std::vector<std::vector<double>> post;  // post[l]: activated output
    std::vector<double> input;
  };

  void forward_cached(std::span<const double> x, Workspace& ws) const;

  // Adds the gradient of scale * (Q(x)[action] - td_target)^2 to grads,
  // using the activations cached by forward_cached. Outputs other than the
  // selected action contribute nothing at the loss layer.
  void accumulate_gradients(const Workspace& ws, int action, double td_target,
                            double scale, Gradients& grads) const;

  Gradients zero_gradients() const;

  // Layer l weight matrix, row-major [out x in], and its bias vector.
  std::vector<double>& weights(int layer) { return weights_[layer]; }
  const std::vector<double>& weights(int layer) const {
    return weights_[layer];
  }
  std::vector<double>& biases(int layer) { return biases_[layer]; }
  const std::vector<double>& biases(int layer) const { return biases_[layer]; }
  int layer_count() const { return static_cast<int>(weights_.size()); }
  std::size_t parameter_count() const;

  void save_checkpoint(const std::string& path) const;
  static Mlp load_checkpoint(const std::string& path);

  friend bool parameters_equal(const Mlp& a, const Mlp& b);
  friend class AdamOptimizer;

 private:
  explicit Mlp(std::vector<int> layer_dims);

  std::vector<int> layer_dims_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<double>> biases_;
};

// Exact value comparison. Networks with different architectures cannot be
// compared.
bool parameters_equal(const Mlp& a, const Mlp& b);

// Adaptive-moment gradient descent (Adam) with bias correction.
class AdamOptimizer {
 public:
  explicit AdamOptimizer(const Mlp& net, double learning_rate = 1e-3,
                         double beta1 = 0.9, double beta2 = 0.999,
                         double epsilon = 1e-8);

  // One descent step. Non-finite gradients abort with TrainingError before
  // any parameter is touched.
  void apply(Mlp& net, const Gradients& grads);

  std::int64_t step_count() const { return step_count_; }
  double learning_rate() const { return learning_rate_; }

 private:
  double learning_rate_;
  double beta1_;
  double beta2_;
  double epsilon_;
  std::int64_t step_count_ = 0;
  Gradients m_;  // first moment
  Gradients v_;  // second moment
};

}  // namespace nestedrl

#endif  // NESTEDRL_MLP_HPP_
