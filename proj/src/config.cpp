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

#include "nestedrl/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "nestedrl/errors.hpp"
#include "nestedrl/strings.hpp"

namespace nestedrl {

namespace {

long long parse_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key + ": '" + value + "' is not an integer");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double out = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || value.empty()) {
    throw ConfigError(key + ": '" + value + "' is not a number");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError(key + ": '" + value + "' is not a boolean");
}

std::optional<int> parse_horizon(const std::string& key,
                                 const std::string& value) {
  if (value == "auto") return std::nullopt;
  return static_cast<int>(parse_int(key, value));
}

std::string horizon_text(const std::optional<int>& h) {
  return h ? std::to_string(*h) : std::string("auto");
}

std::vector<int> parse_dims(const std::string& key, const std::string& value) {
  std::vector<int> dims;
  for (const std::string& part : split(value, ',')) {
    dims.push_back(static_cast<int>(parse_int(key, trim(part))));
  }
  return dims;
}

std::string dims_text(const std::vector<int>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (scenario != "line" && scenario != "zigzag" && scenario != "diamond" &&
      scenario != "custom") {
    throw ConfigError("scenario must be line, zigzag, diamond or custom");
  }
  if (scenario == "custom" && shape_file.empty()) {
    throw ConfigError("custom scenario needs a shape file");
  }
  if (episodes < 1) throw ConfigError("episodes must be at least 1");
  if (eval_every < 1) throw ConfigError("eval_every must be at least 1");
  if (eval_episodes < 1) throw ConfigError("eval_episodes must be at least 1");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  if (max_steps < 1) throw ConfigError("max_steps must be at least 1");
  if (learning_rate <= 0) throw ConfigError("lr must be positive");
  if (gamma < 0 || gamma > 1) throw ConfigError("gamma must lie in [0, 1]");
  if (tau < 1) throw ConfigError("tau must be at least 1");
  if (batch_size < 1) throw ConfigError("batch_size must be at least 1");
  if (replay_capacity == 0) throw ConfigError("replay_capacity must be positive");
  if (replay_warmup < 0) throw ConfigError("warmup cannot be negative");
  if (hidden_dims.empty()) throw ConfigError("need at least one hidden layer");
  for (int d : hidden_dims) {
    if (d < 1) throw ConfigError("hidden layer sizes must be positive");
  }
  if (!(eps_start >= eps_main_floor && eps_main_floor >= 0)) {
    throw ConfigError("need eps_start >= eps_main_floor >= 0");
  }
  if (!(eps_start >= eps_nested_floor && eps_nested_floor >= 0)) {
    throw ConfigError("need eps_start >= eps_nested_floor >= 0");
  }
  // Materializes the schedules so horizon errors surface here.
  main_schedule();
  nested_schedule();
}

ShapeSpec ExperimentConfig::resolve_shape() const {
  if (!shape_file.empty() || scenario == "custom") {
    if (shape_file.empty()) {
      throw ConfigError("custom scenario needs a shape file");
    }
    return ShapeSpec::from_mask_file(shape_file);
  }
  return ShapeSpec::by_name(scenario);
}

ArenaOptions ExperimentConfig::arena_options() const {
  return ArenaOptions{.max_steps = max_steps,
                      .front_cell_drop = front_cell_drop};
}

DdqnOptions ExperimentConfig::ddqn_options() const {
  DdqnOptions o;
  o.gamma = gamma;
  o.target_sync_period = tau;
  o.batch_size = batch_size;
  o.replay_capacity = replay_capacity;
  o.replay_warmup = replay_warmup;
  o.learning_rate = learning_rate;
  o.target_rule = target_rule;
  o.hidden_dims = hidden_dims;
  return o;
}

EpsilonSchedule ExperimentConfig::main_schedule() const {
  // The main agent decays fast so the nested agent explores against mostly
  // greedy commitments.
  const int horizon =
      eps_main_horizon.value_or(std::max(1, episodes * 20 / 100));
  return EpsilonSchedule(eps_start, eps_main_floor, horizon);
}

EpsilonSchedule ExperimentConfig::nested_schedule() const {
  const int horizon =
      eps_nested_horizon.value_or(std::max(1, episodes * 80 / 100));
  return EpsilonSchedule(eps_start, eps_nested_floor, horizon);
}

SystemOptions ExperimentConfig::system_options() const {
  return SystemOptions{
      .ddqn = ddqn_options(),
      .main_schedule = main_schedule(),
      .nested_schedule = nested_schedule(),
      .flat = FlatAgentOptions{.literal_invalid_score =
                                   flat_literal_invalid_score}};
}

void set_config_value(ExperimentConfig& cfg, const std::string& key,
                      const std::string& value) {
  if (key == "experiment.scenario") {
    cfg.scenario = value;
  } else if (key == "experiment.framework") {
    cfg.framework = framework_by_name(value);
  } else if (key == "experiment.episodes") {
    cfg.episodes = static_cast<int>(parse_int(key, value));
  } else if (key == "experiment.eval_every") {
    cfg.eval_every = static_cast<int>(parse_int(key, value));
  } else if (key == "experiment.eval_episodes") {
    cfg.eval_episodes = static_cast<int>(parse_int(key, value));
  } else if (key == "experiment.trials") {
    cfg.trials = static_cast<int>(parse_int(key, value));
  } else if (key == "experiment.seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "experiment.jobs") {
    cfg.jobs = static_cast<int>(parse_int(key, value));
  } else if (key == "experiment.out") {
    cfg.out_dir = value;
  } else if (key == "arena.max_steps") {
    cfg.max_steps = static_cast<int>(parse_int(key, value));
  } else if (key == "arena.front_cell_drop") {
    cfg.front_cell_drop = parse_bool(key, value);
  } else if (key == "arena.shape_file") {
    cfg.shape_file = value;
    if (!value.empty()) cfg.scenario = "custom";
  } else if (key == "approximator.lr") {
    cfg.learning_rate = parse_real(key, value);
  } else if (key == "approximator.hidden") {
    cfg.hidden_dims = parse_dims(key, value);
  } else if (key == "ddqn.gamma") {
    cfg.gamma = parse_real(key, value);
  } else if (key == "ddqn.tau") {
    cfg.tau = static_cast<int>(parse_int(key, value));
  } else if (key == "ddqn.batch_size") {
    cfg.batch_size = static_cast<int>(parse_int(key, value));
  } else if (key == "ddqn.replay_capacity") {
    cfg.replay_capacity = static_cast<std::size_t>(parse_int(key, value));
  } else if (key == "ddqn.warmup") {
    cfg.replay_warmup = static_cast<int>(parse_int(key, value));
  } else if (key == "ddqn.dqn_target") {
    if (value == "eq4") {
      cfg.target_rule = TargetRule::kDoubleDqn;
    } else if (value == "eq3") {
      cfg.target_rule = TargetRule::kDqn;
    } else {
      throw ConfigError("dqn_target must be eq3 or eq4");
    }
  } else if (key == "ddqn.eps_start") {
    cfg.eps_start = parse_real(key, value);
  } else if (key == "ddqn.eps_main_floor") {
    cfg.eps_main_floor = parse_real(key, value);
  } else if (key == "ddqn.eps_nested_floor") {
    cfg.eps_nested_floor = parse_real(key, value);
  } else if (key == "ddqn.eps_main_horizon") {
    cfg.eps_main_horizon = parse_horizon(key, value);
  } else if (key == "ddqn.eps_nested_horizon") {
    cfg.eps_nested_horizon = parse_horizon(key, value);
  } else if (key == "ddqn.flat_invalid_score") {
    if (value == "zero") {
      cfg.flat_literal_invalid_score = false;
    } else if (value == "literal") {
      cfg.flat_literal_invalid_score = true;
    } else {
      throw ConfigError("flat_invalid_score must be zero or literal");
    }
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

std::string get_config_value(const ExperimentConfig& cfg,
                             const std::string& key) {
  if (key == "experiment.scenario") return cfg.scenario;
  if (key == "experiment.framework") return framework_name(cfg.framework);
  if (key == "experiment.episodes") return std::to_string(cfg.episodes);
  if (key == "experiment.eval_every") return std::to_string(cfg.eval_every);
  if (key == "experiment.eval_episodes")
    return std::to_string(cfg.eval_episodes);
  if (key == "experiment.trials") return std::to_string(cfg.trials);
  if (key == "experiment.seed") return std::to_string(cfg.seed);
  if (key == "experiment.jobs") return std::to_string(cfg.jobs);
  if (key == "experiment.out") return cfg.out_dir;
  if (key == "arena.max_steps") return std::to_string(cfg.max_steps);
  if (key == "arena.front_cell_drop")
    return cfg.front_cell_drop ? "true" : "false";
  if (key == "arena.shape_file") return cfg.shape_file;
  if (key == "approximator.lr") return format_double(cfg.learning_rate);
  if (key == "approximator.hidden") return dims_text(cfg.hidden_dims);
  if (key == "ddqn.gamma") return format_double(cfg.gamma);
  if (key == "ddqn.tau") return std::to_string(cfg.tau);
  if (key == "ddqn.batch_size") return std::to_string(cfg.batch_size);
  if (key == "ddqn.replay_capacity") return std::to_string(cfg.replay_capacity);
  if (key == "ddqn.warmup") return std::to_string(cfg.replay_warmup);
  if (key == "ddqn.dqn_target")
    return cfg.target_rule == TargetRule::kDoubleDqn ? "eq4" : "eq3";
  if (key == "ddqn.eps_start") return format_double(cfg.eps_start);
  if (key == "ddqn.eps_main_floor") return format_double(cfg.eps_main_floor);
  if (key == "ddqn.eps_nested_floor")
    return format_double(cfg.eps_nested_floor);
  if (key == "ddqn.eps_main_horizon") return horizon_text(cfg.eps_main_horizon);
  if (key == "ddqn.eps_nested_horizon")
    return horizon_text(cfg.eps_nested_horizon);
  if (key == "ddqn.flat_invalid_score")
    return cfg.flat_literal_invalid_score ? "literal" : "zero";
  throw ConfigError("unknown config key '" + key + "'");
}

namespace {

// Canonical key order; serialize_config and the file parser agree on it.
const char* const kConfigKeys[] = {
    "experiment.scenario",     "experiment.framework",
    "experiment.episodes",     "experiment.eval_every",
    "experiment.eval_episodes", "experiment.trials",
    "experiment.seed",         "experiment.jobs",
    "experiment.out",          "arena.max_steps",
    "arena.front_cell_drop",   "arena.shape_file",
    "approximator.lr",         "approximator.hidden",
    "ddqn.gamma",              "ddqn.tau",
    "ddqn.batch_size",         "ddqn.replay_capacity",
    "ddqn.warmup",             "ddqn.dqn_target",
    "ddqn.eps_start",          "ddqn.eps_main_floor",
    "ddqn.eps_nested_floor",   "ddqn.eps_main_horizon",
    "ddqn.eps_nested_horizon", "ddqn.flat_invalid_score",
};

}  // namespace

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  std::string current_section;
  for (const char* full_key : kConfigKeys) {
    const std::string key(full_key);
    const std::string section = key.substr(0, key.find('.'));
    const std::string name = key.substr(key.find('.') + 1);
    if (section != current_section) {
      if (!current_section.empty()) out << "\n";
      out << "[" << section << "]\n";
      current_section = section;
    }
    out << name << " = " << get_config_value(cfg, key) << "\n";
  }
  return out.str();
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') {
        throw ConfigError("line " + std::to_string(line_no) +
                          ": malformed section header");
      }
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": key outside any [section]");
    }
    set_config_value(cfg, section + "." + key, value);
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void save_config_file(const ExperimentConfig& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write config file '" + path + "'");
  out << serialize_config(cfg);
  if (!out) throw ConfigError("config write failed for '" + path + "'");
}

}  // namespace nestedrl
