// Copyright 2026 The moGram Authors
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

#include "mogram/style.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "mogram/error.hpp"
#include "mogram/layout.hpp"

namespace mogram {

namespace {

constexpr std::array<const char*, 10> kDefaultPalette = {
    "#E69500", "#1F77B4",  // objective 1, objective 2
    "#2CA02C", "#D62728", "#9467BD", "#8C564B", "#E377C2", "#7F7F7F", "#BCBD22", "#17BECF"};

bool is_hex_color(const std::string& c) {
  if (c.size() != 7 || c[0] != '#') return false;
  return std::all_of(c.begin() + 1, c.end(), [](unsigned char ch) { return std::isxdigit(ch) != 0; });
}

}  // namespace

std::string default_color(std::size_t k) {
  if (k < 2) return kDefaultPalette[k];
  return kDefaultPalette[2 + (k - 2) % (kDefaultPalette.size() - 2)];
}

std::string palette_color(const StyleSpec& spec, std::size_t k) {
  return spec.palette.empty() ? default_color(k) : spec.palette.at(k);
}

void validate(const StyleSpec& spec, std::size_t objective_count) {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidStyle, what); };
  if (!spec.palette.empty() && spec.palette.size() < objective_count) {
    bad(fmt::format("palette has {} colors for {} objectives", spec.palette.size(), objective_count));
  }
  for (const auto& c : spec.palette) {
    if (!is_hex_color(c)) bad(fmt::format("palette color '{}' is not #RRGGBB", c));
  }
  if (!is_hex_color(spec.uniform_color)) bad(fmt::format("uniform color '{}' is not #RRGGBB", spec.uniform_color));
  if (!(spec.node_radius > 0.0)) bad("node radius must be positive");
  if (!(spec.thickness_min > 0.0) || !(spec.thickness_min < spec.thickness_max)) {
    bad("thickness range must satisfy 0 < t_min < t_max");
  }
  if (!(spec.pixels_per_unit > 0.0)) bad("pixels_per_unit must be positive");
  if (spec.label_decimals < 0 || spec.label_decimals > 9) bad("label_decimals must lie in [0, 9]");
  auto in_unit = [](std::optional<double> v) { return !v || (*v >= 0.0 && *v <= 1.0); };
  if (!in_unit(spec.s_lo) || !in_unit(spec.s_hi) || (spec.s_lo && spec.s_hi && !(*spec.s_lo < *spec.s_hi))) {
    throw Error(ErrorCode::InvalidRange, "similarity range must satisfy 0 <= s_lo < s_hi <= 1");
  }
}

double sector_alpha(double value, double f_min, double f_max, Sense sense) {
  if (f_max == f_min) return 1.0;
  const double span = f_max - f_min;
  const double alpha = sense == Sense::minimize ? (f_max - value) / span : (value - f_min) / span;
  return std::clamp(alpha, 0.0, 1.0);
}

DisplayRange resolve_display_range(const StyleSpec& spec, const MoGram& graph) {
  double lo = 1.0;
  double hi = 0.0;
  for (const auto& e : graph.edges()) {
    lo = std::min(lo, e.similarity);
    hi = std::max(hi, e.similarity);
  }
  if (graph.edges().empty()) lo = hi = 0.0;
  DisplayRange range{spec.s_lo.value_or(lo), spec.s_hi.value_or(hi)};
  if (range.hi < range.lo) {
    throw Error(ErrorCode::InvalidRange,
                fmt::format("similarity range [{}, {}] is empty for the current edges", range.lo, range.hi));
  }
  return range;
}

double edge_thickness(double similarity, const StyleSpec& spec, DisplayRange range) {
  if (range.hi <= range.lo) return spec.thickness_max;
  const double s = std::clamp(similarity, range.lo, range.hi);
  return spec.thickness_min + (spec.thickness_max - spec.thickness_min) * (s - range.lo) / (range.hi - range.lo);
}

double edge_thickness(double similarity, const StyleSpec& spec) {
  if (!spec.s_lo || !spec.s_hi) {
    throw Error(ErrorCode::InvalidRange, "edge_thickness needs both s_lo and s_hi");
  }
  return edge_thickness(similarity, spec, DisplayRange{*spec.s_lo, *spec.s_hi});
}

std::string format_similarity(double similarity, int decimals) {
  return fmt::format("{:.{}f}", similarity, decimals);
}

StyledMoGram style(const LayoutedMoGram& layout, const SolutionSet& set, const StyleSpec& spec,
                   double desired_diameter) {
  validate(spec, set.objective_count());
  const auto& graph = layout.graph;
  const std::size_t n_obj = set.objective_count();

  StyledMoGram out{layout, set.objectives, {}, {}, {}, {}, !spec.objective_coloring};
  out.layout.positions = normalize_positions(layout.positions, desired_diameter);

  for (int label : graph.labels()) {
    auto it = std::find_if(set.solutions.begin(), set.solutions.end(),
                           [label](const FrontSolution& s) { return s.id == label; });
    if (it == set.solutions.end()) {
      throw Error(ErrorCode::ArityMismatch, fmt::format("node {} has no matching solution", label),
                  fmt::format("node {}", label));
    }
    if (it->objectives.size() != n_obj) {
      throw Error(ErrorCode::ArityMismatch,
                  fmt::format("solution {} has {} objective values for {} objectives", label,
                              it->objectives.size(), n_obj),
                  fmt::format("solution {}", label));
    }
    out.objective_values.push_back(it->objectives);
  }

  // Ranges are taken over the nodes actually shown.
  std::vector<double> f_min(n_obj, 0.0), f_max(n_obj, 0.0);
  for (std::size_t k = 0; k < n_obj; ++k) {
    f_min[k] = f_max[k] = out.objective_values.front()[k];
    for (const auto& values : out.objective_values) {
      f_min[k] = std::min(f_min[k], values[k]);
      f_max[k] = std::max(f_max[k], values[k]);
    }
  }

  for (const auto& values : out.objective_values) {
    std::vector<Sector> sectors;
    if (out.uniform) {
      sectors.push_back({spec.uniform_color, 1.0});
    } else {
      for (std::size_t k = 0; k < n_obj; ++k) {
        sectors.push_back(
            {palette_color(spec, k), sector_alpha(values[k], f_min[k], f_max[k], set.objectives[k].sense)});
      }
    }
    out.node_sectors.push_back(std::move(sectors));
  }

  out.display_range = resolve_display_range(spec, graph);
  for (const auto& e : graph.edges()) {
    out.edge_styles.push_back({edge_thickness(e.similarity, spec, out.display_range),
                               format_similarity(e.similarity, spec.label_decimals)});
  }
  return out;
}

}  // namespace mogram
