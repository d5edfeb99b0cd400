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

#include "nestedrl/mlp.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <utility>

#include "nestedrl/errors.hpp"

namespace nestedrl {

namespace {

constexpr char kCheckpointMagic[8] = {'N', 'R', 'L', 'M', 'L', 'P', '0', '1'};

void write_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

std::uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

void write_f64(std::ostream& out, double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  out.write(b, 8);
}

double read_f64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

}  // namespace

void Gradients::zero() {
  for (auto& w : weights) std::fill(w.begin(), w.end(), 0.0);
  for (auto& b : biases) std::fill(b.begin(), b.end(), 0.0);
}

Mlp::Mlp(std::vector<int> layer_dims) : layer_dims_(std::move(layer_dims)) {
  if (layer_dims_.size() < 2) {
    throw ConfigError("a network needs at least an input and an output layer");
  }
  for (int d : layer_dims_) {
    if (d < 1) throw ConfigError("layer dimensions must be positive");
  }
  const int layers = static_cast<int>(layer_dims_.size()) - 1;
  weights_.resize(layers);
  biases_.resize(layers);
  for (int l = 0; l < layers; ++l) {
    weights_[l].assign(
        static_cast<std::size_t>(layer_dims_[l + 1]) * layer_dims_[l], 0.0);
    biases_[l].assign(layer_dims_[l + 1], 0.0);
  }
}

Mlp::Mlp(std::vector<int> layer_dims, Rng& rng) : Mlp(std::move(layer_dims)) {
  for (int l = 0; l < layer_count(); ++l) {
    const int fan_in = layer_dims_[l];
    const int fan_out = layer_dims_[l + 1];
    const double limit = std::sqrt(6.0 / (fan_in + fan_out));
    for (double& w : weights_[l]) w = rng.uniform(-limit, limit);
  }
}

Mlp Mlp::zeros(std::vector<int> layer_dims) {
  return Mlp(std::move(layer_dims));
}

std::size_t Mlp::parameter_count() const {
  std::size_t n = 0;
  for (int l = 0; l < layer_count(); ++l) {
    n += weights_[l].size() + biases_[l].size();
  }
  return n;
}

std::vector<double> Mlp::forward(std::span<const double> x) const {
  Workspace ws;
  forward_cached(x, ws);
  return ws.post.back();
}

void Mlp::forward_cached(std::span<const double> x, Workspace& ws) const {
  if (static_cast<int>(x.size()) != input_dim()) {
    throw ContractError("input dimension mismatch");
  }
  const int layers = layer_count();
  ws.pre.resize(layers);
  ws.post.resize(layers);
  ws.input.assign(x.begin(), x.end());

  const std::vector<double>* in = &ws.input;
  for (int l = 0; l < layers; ++l) {
    const int out_dim = layer_dims_[l + 1];
    const int in_dim = layer_dims_[l];
    ws.pre[l].resize(out_dim);
    ws.post[l].resize(out_dim);
    const double* w = weights_[l].data();
    for (int j = 0; j < out_dim; ++j) {
      double acc = biases_[l][j];
      const double* row = w + static_cast<std::size_t>(j) * in_dim;
      for (int i = 0; i < in_dim; ++i) acc += row[i] * (*in)[i];
      ws.pre[l][j] = acc;
      ws.post[l][j] = (l + 1 < layers) ? std::tanh(acc) : acc;
    }
    in = &ws.post[l];
  }
}

void Mlp::accumulate_gradients(const Workspace& ws, int action,
                               double td_target, double scale,
                               Gradients& grads) const {
  const int layers = layer_count();
  if (action < 0 || action >= output_dim()) {
    throw ContractError("action index out of range");
  }

  // Loss-layer delta: only the selected output carries error.
  std::vector<double> delta(output_dim(), 0.0);
  delta[action] = 2.0 * scale * (ws.post.back()[action] - td_target);

  std::vector<double> delta_prev;
  for (int l = layers - 1; l >= 0; --l) {
    const int out_dim = layer_dims_[l + 1];
    const int in_dim = layer_dims_[l];
    const std::vector<double>& layer_in = (l == 0) ? ws.input : ws.post[l - 1];

    for (int j = 0; j < out_dim; ++j) {
      const double d = delta[j];
      if (d == 0.0) continue;
      grads.biases[l][j] += d;
      double* grow = grads.weights[l].data() + static_cast<std::size_t>(j) * in_dim;
      for (int i = 0; i < in_dim; ++i) grow[i] += d * layer_in[i];
    }

    if (l == 0) break;
    delta_prev.assign(in_dim, 0.0);
    const double* w = weights_[l].data();
    for (int j = 0; j < out_dim; ++j) {
      const double d = delta[j];
      if (d == 0.0) continue;
      const double* row = w + static_cast<std::size_t>(j) * in_dim;
      for (int i = 0; i < in_dim; ++i) delta_prev[i] += d * row[i];
    }
    // tanh'(z) expressed through the activation value.
    for (int i = 0; i < in_dim; ++i) {
      const double t = ws.post[l - 1][i];
      delta_prev[i] *= 1.0 - t * t;
    }
    delta.swap(delta_prev);
  }
}

Gradients Mlp::zero_gradients() const {
  Gradients g;
  g.weights.resize(layer_count());
  g.biases.resize(layer_count());
  for (int l = 0; l < layer_count(); ++l) {
    g.weights[l].assign(weights_[l].size(), 0.0);
    g.biases[l].assign(biases_[l].size(), 0.0);
  }
  return g;
}

bool parameters_equal(const Mlp& a, const Mlp& b) {
  if (a.layer_dims_ != b.layer_dims_) {
    throw ContractError("cannot compare networks with different shapes");
  }
  return a.weights_ == b.weights_ && a.biases_ == b.biases_;
}

void Mlp::save_checkpoint(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write checkpoint '" + path + "'");
  out.write(kCheckpointMagic, sizeof(kCheckpointMagic));
  write_u32(out, static_cast<std::uint32_t>(layer_dims_.size()));
  for (int d : layer_dims_) write_u32(out, static_cast<std::uint32_t>(d));
  for (int l = 0; l < layer_count(); ++l) {
    for (double w : weights_[l]) write_f64(out, w);
    for (double b : biases_[l]) write_f64(out, b);
  }
  if (!out) throw ConfigError("checkpoint write failed for '" + path + "'");
}

Mlp Mlp::load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open checkpoint '" + path + "'");
  char magic[sizeof(kCheckpointMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kCheckpointMagic, sizeof(magic)) != 0) {
    throw ConfigError("'" + path + "' is not a network checkpoint");
  }
  const std::uint32_t dims = read_u32(in);
  if (!in || dims < 2 || dims > 64) {
    throw ConfigError("checkpoint header is corrupt");
  }
  std::vector<int> layer_dims(dims);
  for (auto& d : layer_dims) d = static_cast<int>(read_u32(in));
  Mlp net(std::move(layer_dims));
  for (int l = 0; l < net.layer_count(); ++l) {
    for (double& w : net.weights_[l]) w = read_f64(in);
    for (double& b : net.biases_[l]) b = read_f64(in);
  }
  if (!in) throw ConfigError("checkpoint '" + path + "' is truncated");
  return net;
}

AdamOptimizer::AdamOptimizer(const Mlp& net, double learning_rate,
                             double beta1, double beta2, double epsilon)
    : learning_rate_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      epsilon_(epsilon),
      m_(net.zero_gradients()),
      v_(net.zero_gradients()) {
  if (learning_rate_ <= 0) throw ConfigError("learning rate must be positive");
}

void AdamOptimizer::apply(Mlp& net, const Gradients& grads) {
  if (grads.weights.size() != net.weights_.size()) {
    throw ContractError("gradient shape mismatch");
  }
  for (std::size_t l = 0; l < grads.weights.size(); ++l) {
    if (grads.weights[l].size() != net.weights_[l].size() ||
        grads.biases[l].size() != net.biases_[l].size()) {
      throw ContractError("gradient shape mismatch");
    }
    for (double g : grads.weights[l]) {
      if (!std::isfinite(g)) throw TrainingError("non-finite weight gradient");
    }
    for (double g : grads.biases[l]) {
      if (!std::isfinite(g)) throw TrainingError("non-finite bias gradient");
    }
  }

  ++step_count_;
  const double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(step_count_));
  const double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(step_count_));

  auto update = [&](std::vector<double>& params, const std::vector<double>& g,
                    std::vector<double>& m, std::vector<double>& v) {
    for (std::size_t i = 0; i < params.size(); ++i) {
      m[i] = beta1_ * m[i] + (1.0 - beta1_) * g[i];
      v[i] = beta2_ * v[i] + (1.0 - beta2_) * g[i] * g[i];
      const double mhat = m[i] / bc1;
      const double vhat = v[i] / bc2;
      params[i] -= learning_rate_ * mhat / (std::sqrt(vhat) + epsilon_);
    }
  };
  for (std::size_t l = 0; l < grads.weights.size(); ++l) {
    update(net.weights_[l], grads.weights[l], m_.weights[l], v_.weights[l]);
    update(net.biases_[l], grads.biases[l], m_.biases[l], v_.biases[l]);
  }
}

}  // namespace nestedrl
