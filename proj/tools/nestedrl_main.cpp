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

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "nestedrl.h"

namespace {

constexpr int kExitUsage = 2;

struct ConfigHandle {
  nrl_config* ptr = nrl_config_new();
  ~ConfigHandle() { nrl_config_free(ptr); }
  ConfigHandle() = default;
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

int status_exit_code(nrl_status status) {
  switch (status) {
    case NRL_OK:
      return 0;
    case NRL_ERR_CONFIG:
    case NRL_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return 1;
  }
}

int fail(nrl_status status) {
  std::fprintf(stderr, "error: %s\n", nrl_last_error());
  return status_exit_code(status);
}

// One CLI flag bound to a config key. The raw command-line string is handed
// to the config layer verbatim, so the CLI adds no parsing of its own.
struct BoundFlag {
  CLI::Option* option = nullptr;
  std::string key;
  bool is_flag = false;  // boolean switch, value is its presence
};

struct CommonFlags {
  std::string config_path;
  std::string scenario = "line";
  std::string framework = "nested";
  std::string episodes = "3000";
  std::string eval_every = "30";
  std::string trials = "10";
  std::string seed = "1";
  std::string jobs = "1";
  std::string out = "runs";
  std::string shape_file;
  std::string gamma = "0.99";
  std::string tau = "100";
  std::string lr = "0.001";
  std::string eps_main_floor = "0.01";
  std::string eps_nested_floor = "0.001";
  std::string eps_main_horizon = "auto";
  std::string eps_nested_horizon = "auto";
  std::string dqn_target = "eq4";
  bool front_cell_drop = false;

  std::vector<BoundFlag> bound;

  void add_to(CLI::App& cmd, bool with_training_flags) {
    cmd.add_option("--config", config_path,
                   "Config file; command-line flags override it");
    auto bind = [&](CLI::Option* opt, std::string key, bool is_flag = false) {
      bound.push_back({opt, std::move(key), is_flag});
    };
    bind(cmd.add_option("--scenario", scenario,
                        "Scenario: line, zigzag, diamond or custom")
             ->capture_default_str(),
         "experiment.scenario");
    bind(cmd.add_option("--shape-file", shape_file,
                        "Custom 15x15 mask file ('#'/'.')"),
         "arena.shape_file");
    if (with_training_flags) {
      bind(cmd.add_option("--framework", framework,
                          "Framework: nested, hierarchical or flat")
               ->capture_default_str(),
           "experiment.framework");
      bind(cmd.add_option("--episodes", episodes, "Training episodes per trial")
               ->capture_default_str(),
           "experiment.episodes");
      bind(cmd.add_option("--eval-every", eval_every,
                          "Episodes between greedy evaluations")
               ->capture_default_str(),
           "experiment.eval_every");
      bind(cmd.add_option("--trials", trials, "Independent trials to average")
               ->capture_default_str(),
           "experiment.trials");
      bind(cmd.add_option("--seed", seed, "Base seed; trials derive from it")
               ->capture_default_str(),
           "experiment.seed");
      bind(cmd.add_option("--jobs", jobs, "Trials to run concurrently")
               ->capture_default_str(),
           "experiment.jobs");
      bind(cmd.add_option("--out", out, "Output directory for CSV results")
               ->capture_default_str(),
           "experiment.out");
      bind(cmd.add_option("--gamma", gamma, "Discount factor")
               ->capture_default_str(),
           "ddqn.gamma");
      bind(cmd.add_option("--tau", tau, "Learner steps between target syncs")
               ->capture_default_str(),
           "ddqn.tau");
      bind(cmd.add_option("--lr", lr, "Learning rate")->capture_default_str(),
           "approximator.lr");
      bind(cmd.add_option("--eps-main-floor", eps_main_floor,
                          "Epsilon floor for the main/top agent")
               ->capture_default_str(),
           "ddqn.eps_main_floor");
      bind(cmd.add_option("--eps-nested-floor", eps_nested_floor,
                          "Epsilon floor for the nested/low/flat agent")
               ->capture_default_str(),
           "ddqn.eps_nested_floor");
      bind(cmd.add_option("--eps-main-horizon", eps_main_horizon,
                          "Main-agent decay horizon in episodes, or 'auto' "
                          "(20% of episodes)")
               ->capture_default_str(),
           "ddqn.eps_main_horizon");
      bind(cmd.add_option("--eps-nested-horizon", eps_nested_horizon,
                          "Nested-agent decay horizon in episodes, or 'auto' "
                          "(80% of episodes)")
               ->capture_default_str(),
           "ddqn.eps_nested_horizon");
      bind(cmd.add_option("--dqn-target", dqn_target,
                          "Bootstrap target rule: eq4 (double DQN) or eq3 "
                          "(plain DQN)")
               ->capture_default_str(),
           "ddqn.dqn_target");
      bind(cmd.add_flag("--front-cell-drop", front_cell_drop,
                        "Drop blocks one cell ahead of the agent (default: "
                        "on the agent's cell)"),
           "arena.front_cell_drop", true);
    }
  }

  // Loads --config first, then lays explicitly given flags over it.
  nrl_status apply(nrl_config* cfg) const {
    if (!config_path.empty()) {
      const nrl_status s = nrl_config_load_file(cfg, config_path.c_str());
      if (s != NRL_OK) return s;
    }
    for (const BoundFlag& b : bound) {
      if (b.option->count() == 0) continue;
      const std::string value =
          b.is_flag ? "true" : b.option->results().front();
      const nrl_status s = nrl_config_set(cfg, b.key.c_str(), value.c_str());
      if (s != NRL_OK) return s;
    }
    return NRL_OK;
  }

  std::string out_dir(const nrl_config* cfg) const {
    char buf[1024] = "runs";
    nrl_config_get(cfg, "experiment.out", buf, sizeof(buf));
    return buf;
  }
};

void print_summary(const char* framework, const nrl_run_summary& s) {
  std::printf("%-13s trials=%d failed=%d final_mean_score=%g\n", framework,
              s.trials_done, s.trials_failed, s.final_mean_score);
}

int run_train(const CommonFlags& flags) {
  ConfigHandle cfg;
  nrl_status s = flags.apply(cfg.ptr);
  if (s != NRL_OK) return fail(s);
  const std::string out = flags.out_dir(cfg.ptr);
  nrl_run_summary summary{};
  s = nrl_run_experiment(cfg.ptr, out.c_str(), &summary);
  if (s != NRL_OK) return fail(s);
  char framework[64] = "?";
  nrl_config_get(cfg.ptr, "experiment.framework", framework,
                 sizeof(framework));
  print_summary(framework, summary);
  std::printf("wrote %s/curves.csv and %s/summary.csv\n", out.c_str(),
              out.c_str());
  return 0;
}

int run_compare(const CommonFlags& flags) {
  ConfigHandle cfg;
  nrl_status s = flags.apply(cfg.ptr);
  if (s != NRL_OK) return fail(s);
  const std::string out = flags.out_dir(cfg.ptr);
  nrl_run_summary summaries[3] = {};
  s = nrl_run_compare(cfg.ptr, out.c_str(), summaries);
  if (s != NRL_OK) return fail(s);
  static const char* names[] = {"nested", "hierarchical", "flat"};
  for (int i = 0; i < 3; ++i) print_summary(names[i], summaries[i]);
  std::printf("wrote %s/curves.csv and %s/summary.csv\n", out.c_str(),
              out.c_str());
  return 0;
}

int run_oracle(const CommonFlags& flags) {
  ConfigHandle cfg;
  nrl_status s = flags.apply(cfg.ptr);
  if (s != NRL_OK) return fail(s);
  nrl_oracle_result r{};
  s = nrl_oracle_plan(cfg.ptr, &r);
  if (s != NRL_OK) return fail(s);
  char scenario[256] = "?";
  nrl_config_get(cfg.ptr, "experiment.scenario", scenario, sizeof(scenario));
  std::printf("scenario: %s\n", scenario);
  std::printf("max_main_reward: %d\n", r.max_main_reward);
  std::printf("max_nested_return: %d\n", r.max_nested_return);
  std::printf("min_steps: %d\n", r.min_steps);
  std::printf("optimal_material: %s\n",
              r.optimal_material == 1 ? "stone" : "wood");
  std::printf("proven: %s\n", r.proven ? "yes" : "no");
  return 0;
}

int run_plot(const std::string& csv_path, std::string svg_path) {
  if (svg_path.empty()) {
    svg_path = csv_path;
    const std::size_t dot = svg_path.find_last_of('.');
    if (dot != std::string::npos) svg_path.resize(dot);
    svg_path += ".svg";
  }
  const nrl_status s = nrl_plot_curves(csv_path.c_str(), svg_path.c_str());
  if (s != NRL_OK) return fail(s);
  std::printf("wrote %s\n", svg_path.c_str());
  return 0;
}

int run_gradcheck(const std::string& seed_text) {
  constexpr int kNets = 100;
  constexpr double kTolerance = 1e-4;
  const std::uint64_t seed = std::strtoull(seed_text.c_str(), nullptr, 10);
  double max_rel_error = 0.0;
  const nrl_status s = nrl_gradient_check(kNets, seed, &max_rel_error);
  if (s != NRL_OK) return fail(s);
  std::printf("gradient check over %d random networks: max relative error "
              "%.3e (tolerance %.0e)\n",
              kNets, max_rel_error, kTolerance);
  if (max_rel_error >= kTolerance) {
    std::fprintf(stderr, "error: gradient check failed\n");
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deep nested-agent laboratory: a block-building grid world "
               "with nested, hierarchical and flat DDQN agents"};
  app.require_subcommand(1);
  app.footer(
      "Config-file-only keys (defaults): ddqn.replay_capacity = 1000000, "
      "ddqn.batch_size = 32, ddqn.warmup = 500, ddqn.eps_start = 1.0, "
      "approximator.hidden = 32,32, arena.max_steps = 500, "
      "experiment.eval_episodes = 1, ddqn.flat_invalid_score = zero");

  CommonFlags train_flags;
  CLI::App* train = app.add_subcommand(
      "train", "Train one framework on one scenario and write CSV curves");
  train_flags.add_to(*train, /*with_training_flags=*/true);

  CommonFlags compare_flags;
  CLI::App* compare = app.add_subcommand(
      "compare",
      "Train all three frameworks on one scenario and write combined CSVs");
  compare_flags.add_to(*compare, /*with_training_flags=*/true);

  CommonFlags oracle_flags;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Print planner bounds (best score, placements, steps)");
  oracle_flags.add_to(*oracle, /*with_training_flags=*/false);

  std::string plot_input;
  std::string plot_output;
  CLI::App* plot = app.add_subcommand(
      "plot", "Render a curves CSV into a standalone SVG line chart");
  plot->add_option("csv", plot_input, "Curves CSV produced by train/compare")
      ->required();
  plot->add_option("--out", plot_output,
                   "Output SVG path (default: input with .svg)");

  std::string gradcheck_seed = "42";
  CLI::App* gradcheck = app.add_subcommand(
      "gradcheck",
      "Check analytic backprop against finite differences on random nets");
  gradcheck->add_option("--seed", gradcheck_seed, "Seed for the random nets")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return kExitUsage;
  }

  if (train->parsed()) return run_train(train_flags);
  if (compare->parsed()) return run_compare(compare_flags);
  if (oracle->parsed()) return run_oracle(oracle_flags);
  if (plot->parsed()) return run_plot(plot_input, plot_output);
  if (gradcheck->parsed()) return run_gradcheck(gradcheck_seed);
  return kExitUsage;
}
