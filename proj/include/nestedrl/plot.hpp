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

#ifndef NESTEDRL_PLOT_HPP_
#define NESTEDRL_PLOT_HPP_

#include <string>
#include <vector>

#include "nestedrl/harness.hpp"

namespace nestedrl {

// Renders learning curves as a self-contained SVG line chart: one series
// per framework (trials averaged per checkpoint), axes with ticks, legend.
// Pure function of its input, so output bytes are reproducible.
std::string render_curves_svg(const std::vector<LearningCurve>& curves);

// CSV in, SVG out.
void plot_curves_file(const std::string& csv_path,
                      const std::string& svg_path);

}  // namespace nestedrl

#endif  // NESTEDRL_PLOT_HPP_
