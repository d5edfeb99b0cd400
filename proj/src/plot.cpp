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

#include "nestedrl/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nestedrl/errors.hpp"
#include "nestedrl/strings.hpp"

namespace nestedrl {

namespace {

struct Series {
  std::string label;
  std::vector<int> episodes;
  std::vector<double> scores;  // mean across trials
};

const char* series_color(std::size_t index) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                  "#d62728", "#9467bd", "#8c564b"};
  return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

std::string fmt2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Largest of 1/2/5 * 10^k not above the raw step, so ticks land on round
// numbers.
double nice_step(double range, int target_ticks) {
  const double raw = range / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {5.0, 2.0, 1.0}) {
    if (m * mag <= raw) return m * mag;
  }
  return mag;
}

std::vector<Series> collapse_by_framework(
    const std::vector<LearningCurve>& curves) {
  std::vector<Series> series;
  std::map<std::string, std::size_t> index;  // framework -> series slot
  std::vector<std::map<int, std::pair<double, int>>> sums;

  for (const LearningCurve& c : curves) {
    auto [it, inserted] = index.try_emplace(c.framework, series.size());
    if (inserted) {
      series.push_back({c.framework, {}, {}});
      sums.emplace_back();
    }
    auto& acc = sums[it->second];
    for (const CurvePoint& p : c.points) {
      auto& slot = acc[p.episode];
      slot.first += p.score;
      slot.second += 1;
    }
  }
  // Series order is first-seen order in the CSV; points come out sorted by
  // episode courtesy of the map.
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (const auto& [episode, slot] : sums[i]) {
      series[i].episodes.push_back(episode);
      series[i].scores.push_back(slot.first / slot.second);
    }
  }
  return series;
}

}  // namespace

std::string render_curves_svg(const std::vector<LearningCurve>& curves) {
  if (curves.empty()) throw ConfigError("no curves to plot");
  const std::vector<Series> series = collapse_by_framework(curves);

  const double width = 860, height = 540;
  const double ml = 70, mr = 20, mt = 40, mb = 55;  // margins
  const double pw = width - ml - mr;                // plot box
  const double ph = height - mt - mb;

  int x_min = series[0].episodes.front(), x_max = x_min;
  double y_min = series[0].scores.front(), y_max = y_min;
  for (const Series& s : series) {
    for (int e : s.episodes) {
      x_min = std::min(x_min, e);
      x_max = std::max(x_max, e);
    }
    for (double v : s.scores) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max - y_min < 1.0) y_max = y_min + 1.0;
  const double y_pad = 0.05 * (y_max - y_min);
  y_min -= y_pad;
  y_max += y_pad;

  const auto sx = [&](double e) {
    return ml + pw * (e - x_min) / (x_max - x_min);
  };
  const auto sy = [&](double v) {
    return mt + ph * (1.0 - (v - y_min) / (y_max - y_min));
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  svg << "<text x=\"" << fmt2(width / 2) << "\" y=\"24\" font-family=\"sans-serif\""
      << " font-size=\"16\" text-anchor=\"middle\">" << curves.front().scenario
      << " scenario: evaluation score by training episode</text>\n";

  // Axes.
  svg << "<line x1=\"" << fmt2(ml) << "\" y1=\"" << fmt2(mt + ph) << "\" x2=\""
      << fmt2(ml + pw) << "\" y2=\"" << fmt2(mt + ph)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fmt2(ml) << "\" y1=\"" << fmt2(mt) << "\" x2=\""
      << fmt2(ml) << "\" y2=\"" << fmt2(mt + ph) << "\" stroke=\"black\"/>\n";

  const double x_step = nice_step(x_max - x_min, 6);
  for (double e = std::ceil(x_min / x_step) * x_step; e <= x_max + 1e-9;
       e += x_step) {
    const double px = sx(e);
    svg << "<line x1=\"" << fmt2(px) << "\" y1=\"" << fmt2(mt + ph)
        << "\" x2=\"" << fmt2(px) << "\" y2=\"" << fmt2(mt + ph + 5)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt2(px) << "\" y=\"" << fmt2(mt + ph + 20)
        << "\" font-family=\"sans-serif\" font-size=\"12\""
        << " text-anchor=\"middle\">" << format_double(e) << "</text>\n";
  }
  const double y_step = nice_step(y_max - y_min, 6);
  for (double v = std::ceil(y_min / y_step) * y_step; v <= y_max + 1e-9;
       v += y_step) {
    const double py = sy(v);
    svg << "<line x1=\"" << fmt2(ml - 5) << "\" y1=\"" << fmt2(py)
        << "\" x2=\"" << fmt2(ml) << "\" y2=\"" << fmt2(py)
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fmt2(ml) << "\" y1=\"" << fmt2(py) << "\" x2=\""
        << fmt2(ml + pw) << "\" y2=\"" << fmt2(py)
        << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << fmt2(ml - 9) << "\" y=\"" << fmt2(py + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\""
        << " text-anchor=\"end\">" << format_double(v) << "</text>\n";
  }

  svg << "<text x=\"" << fmt2(ml + pw / 2) << "\" y=\"" << fmt2(height - 12)
      << "\" font-family=\"sans-serif\" font-size=\"13\""
      << " text-anchor=\"middle\">episode</text>\n";
  svg << "<text x=\"18\" y=\"" << fmt2(mt + ph / 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
      << " transform=\"rotate(-90 18 " << fmt2(mt + ph / 2)
      << ")\">score</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    svg << "<polyline fill=\"none\" stroke=\"" << series_color(i)
        << "\" stroke-width=\"1.8\" points=\"";
    for (std::size_t k = 0; k < series[i].episodes.size(); ++k) {
      if (k) svg << " ";
      svg << fmt2(sx(series[i].episodes[k])) << ","
          << fmt2(sy(series[i].scores[k]));
    }
    svg << "\"/>\n";
  }

  // Legend, top-left inside the plot box.
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double ly = mt + 16 + 18 * static_cast<double>(i);
    svg << "<line x1=\"" << fmt2(ml + 10) << "\" y1=\"" << fmt2(ly)
        << "\" x2=\"" << fmt2(ml + 34) << "\" y2=\"" << fmt2(ly)
        << "\" stroke=\"" << series_color(i) << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << fmt2(ml + 40) << "\" y=\"" << fmt2(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << series[i].label
        << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

void plot_curves_file(const std::string& csv_path,
                      const std::string& svg_path) {
  const std::vector<LearningCurve> curves = load_curves_csv(csv_path);
  std::ofstream out(svg_path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write SVG '" + svg_path + "'");
  out << render_curves_svg(curves);
  if (!out) throw ConfigError("SVG write failed for '" + svg_path + "'");
}

}  // namespace nestedrl
