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

#include "nestedrl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "nestedrl/errors.hpp"
#include "nestedrl/strings.hpp"

namespace nestedrl {

LearningCurve run_trial(const ExperimentConfig& cfg, int trial) {
  cfg.validate();
  Rng rng(Rng::derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
  const ShapeSpec shape = cfg.resolve_shape();
  Arena arena(shape, cfg.arena_options());
  auto system = make_system(cfg.framework, cfg.system_options(), rng);
  const EpsilonSchedule eps_main = cfg.main_schedule();
  const EpsilonSchedule eps_nested = cfg.nested_schedule();

  LearningCurve curve;
  curve.scenario = cfg.scenario;
  curve.framework = framework_name(cfg.framework);
  curve.trial = trial;

  for (int e = 0; e < cfg.episodes; ++e) {
    arena.reset();
    system->run_episode(arena, e, /*train=*/true, rng);

    const int completed = e + 1;
    if (completed % cfg.eval_every == 0 || completed == cfg.episodes) {
      double score = 0.0;
      for (int k = 0; k < cfg.eval_episodes; ++k) {
        arena.reset();
        score += system->run_episode(arena, e, /*train=*/false, rng).score;
      }
      score /= cfg.eval_episodes;
      curve.points.push_back({completed, score, eps_main.value(completed),
                              eps_nested.value(completed)});
    }
  }
  return curve;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.scenario = cfg.scenario;
  result.framework = framework_name(cfg.framework);

  struct TrialOutcome {
    LearningCurve curve;
    bool failed = false;
  };
  std::vector<TrialOutcome> outcomes(cfg.trials);

  const auto work = [&](int trial) {
    try {
      outcomes[trial].curve = run_trial(cfg, trial);
    } catch (const TrainingError&) {
      outcomes[trial].failed = true;
    }
  };

  const int jobs = std::min(cfg.jobs, cfg.trials);
  if (jobs <= 1) {
    for (int t = 0; t < cfg.trials; ++t) work(t);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&]() {
        while (true) {
          const int t = next.fetch_add(1);
          if (t >= cfg.trials) return;
          work(t);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  for (int t = 0; t < cfg.trials; ++t) {
    if (outcomes[t].failed) {
      result.failed_trials.push_back(t);
    } else {
      result.curves.push_back(std::move(outcomes[t].curve));
    }
  }
  result.summary = aggregate(result.curves);
  return result;
}

std::vector<SummaryRow> aggregate(const std::vector<LearningCurve>& curves) {
  if (curves.empty()) return {};
  const std::size_t points = curves.front().points.size();
  for (const LearningCurve& c : curves) {
    if (c.points.size() != points) {
      throw ContractError("curves disagree on the evaluation grid");
    }
    for (std::size_t i = 0; i < points; ++i) {
      if (c.points[i].episode != curves.front().points[i].episode) {
        throw ContractError("curves disagree on the evaluation grid");
      }
    }
  }

  std::vector<SummaryRow> summary(points);
  const int n = static_cast<int>(curves.size());
  for (std::size_t i = 0; i < points; ++i) {
    SummaryRow& row = summary[i];
    row.episode = curves.front().points[i].episode;
    row.trials_used = n;
    row.min = row.max = curves.front().points[i].score;
    double sum = 0.0;
    for (const LearningCurve& c : curves) {
      const double s = c.points[i].score;
      sum += s;
      row.min = std::min(row.min, s);
      row.max = std::max(row.max, s);
    }
    row.mean = sum / n;
    double sq = 0.0;
    for (const LearningCurve& c : curves) {
      const double d = c.points[i].score - row.mean;
      sq += d * d;
    }
    row.stddev = std::sqrt(sq / n);
  }
  return summary;
}

std::string curves_to_csv(const std::vector<LearningCurve>& curves) {
  std::ostringstream out;
  out << "scenario,framework,trial,episode,score,eps_main,eps_nested\n";
  for (const LearningCurve& c : curves) {
    for (const CurvePoint& p : c.points) {
      out << c.scenario << "," << c.framework << "," << c.trial << ","
          << p.episode << "," << format_double(p.score) << ","
          << format_double(p.eps_main) << "," << format_double(p.eps_nested)
          << "\n";
    }
  }
  return out.str();
}

std::string summary_to_csv(const std::string& scenario,
                           const std::string& framework,
                           const std::vector<SummaryRow>& summary) {
  std::ostringstream out;
  out << "scenario,framework,episode,mean,std,min,max,trials_used\n";
  for (const SummaryRow& r : summary) {
    out << scenario << "," << framework << "," << r.episode << ","
        << format_double(r.mean) << "," << format_double(r.stddev) << ","
        << format_double(r.min) << "," << format_double(r.max) << ","
        << r.trials_used << "\n";
  }
  return out.str();
}

std::vector<LearningCurve> curves_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "scenario,framework,trial,episode,score,eps_main,eps_nested") {
    throw ConfigError("not a curves CSV (unexpected header)");
  }
  std::vector<LearningCurve> curves;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cols = split(trim(line), ',');
    if (cols.size() != 7) {
      throw ConfigError("curves CSV line " + std::to_string(line_no) +
                        ": expected 7 columns");
    }
    CurvePoint p;
    const int trial = std::atoi(cols[2].c_str());
    p.episode = std::atoi(cols[3].c_str());
    p.score = std::strtod(cols[4].c_str(), nullptr);
    p.eps_main = std::strtod(cols[5].c_str(), nullptr);
    p.eps_nested = std::strtod(cols[6].c_str(), nullptr);
    if (curves.empty() || curves.back().scenario != cols[0] ||
        curves.back().framework != cols[1] || curves.back().trial != trial) {
      curves.push_back({cols[0], cols[1], trial, {}});
    }
    curves.back().points.push_back(p);
  }
  return curves;
}

std::vector<LearningCurve> load_curves_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open curves CSV '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return curves_from_csv(buf.str());
}

namespace {

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << text;
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create directory '" + dir + "'");
}

}  // namespace

ExperimentResult run_and_write(const ExperimentConfig& cfg,
                               const std::string& out_dir) {
  ExperimentResult result = run_experiment(cfg);
  ensure_dir(out_dir);
  write_text_file(out_dir + "/curves.csv", curves_to_csv(result.curves));
  write_text_file(
      out_dir + "/summary.csv",
      summary_to_csv(result.scenario, result.framework, result.summary));
  return result;
}

std::vector<ExperimentResult> run_compare(const ExperimentConfig& cfg,
                                          const std::string& out_dir) {
  static constexpr FrameworkKind kOrder[] = {FrameworkKind::kNested,
                                             FrameworkKind::kHierarchical,
                                             FrameworkKind::kFlat};
  std::vector<ExperimentResult> results;
  std::vector<LearningCurve> all_curves;
  std::ostringstream summary;
  summary << "scenario,framework,episode,mean,std,min,max,trials_used\n";
  for (FrameworkKind kind : kOrder) {
    ExperimentConfig sub = cfg;
    sub.framework = kind;
    ExperimentResult r = run_experiment(sub);
    all_curves.insert(all_curves.end(), r.curves.begin(), r.curves.end());
    const std::string block =
        summary_to_csv(r.scenario, r.framework, r.summary);
    summary << block.substr(block.find('\n') + 1);  // strip the header
    results.push_back(std::move(r));
  }
  ensure_dir(out_dir);
  write_text_file(out_dir + "/curves.csv", curves_to_csv(all_curves));
  write_text_file(out_dir + "/summary.csv", summary.str());
  return results;
}

}  // namespace nestedrl
