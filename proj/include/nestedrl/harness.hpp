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

#ifndef NESTEDRL_HARNESS_HPP_
#define NESTEDRL_HARNESS_HPP_

#include <string>
#include <vector>

#include "nestedrl/config.hpp"

namespace nestedrl {

struct CurvePoint {
  int episode = 0;     // training episodes completed at this checkpoint
  double score = 0.0;  // greedy evaluation score (mean over eval_episodes)
  double eps_main = 0.0;
  double eps_nested = 0.0;
};

struct LearningCurve {
  std::string scenario;
  std::string framework;
  int trial = 0;
  std::vector<CurvePoint> points;
};

struct SummaryRow {
  int episode = 0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation across trials
  double min = 0.0;
  double max = 0.0;
  int trials_used = 0;
};

struct ExperimentResult {
  std::string scenario;
  std::string framework;
  std::vector<LearningCurve> curves;  // surviving trials, trial order
  std::vector<SummaryRow> summary;
  std::vector<int> failed_trials;
};

// Trains cfg.trials independent trials (up to cfg.jobs at a time), each on
// a deterministic stream derived from (seed, trial), evaluating greedily
// every eval_every episodes plus once at the very end. Trials that blow up
// with non-finite training values are dropped from the aggregate and
// reported in failed_trials.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// One trial of the above; exposed for tests.
LearningCurve run_trial(const ExperimentConfig& cfg, int trial);

// Cross-trial per-checkpoint statistics. All curves must share the same
// episode axis.
std::vector<SummaryRow> aggregate(const std::vector<LearningCurve>& curves);

std::string curves_to_csv(const std::vector<LearningCurve>& curves);
std::string summary_to_csv(const std::string& scenario,
                           const std::string& framework,
                           const std::vector<SummaryRow>& summary);
std::vector<LearningCurve> curves_from_csv(const std::string& text);
std::vector<LearningCurve> load_curves_csv(const std::string& path);

// Runs one framework and writes <out_dir>/curves.csv and
// <out_dir>/summary.csv. Creates the directory if needed.
ExperimentResult run_and_write(const ExperimentConfig& cfg,
                               const std::string& out_dir);

// Runs all three frameworks on the configured scenario and writes combined
// curves.csv / summary.csv (nested, then hierarchical, then flat).
std::vector<ExperimentResult> run_compare(const ExperimentConfig& cfg,
                                          const std::string& out_dir);

}  // namespace nestedrl

#endif  // NESTEDRL_HARNESS_HPP_
