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

#pragma once

// Visual encoding of a laid-out moGram: one colored sector per objective
// whose opacity tracks how good the value is, and edge strokes whose width
// tracks similarity.

#include <optional>
#include <string>
#include <vector>

#include "mogram/model.hpp"

namespace mogram {

struct StyleSpec {
  /// One color per objective; empty means the default cycle (orange, blue,
  /// then eight further colors).
  std::vector<std::string> palette;
  double node_radius = 16.0;    // px
  double thickness_min = 1.0;   // px
  double thickness_max = 8.0;   // px
  /// Similarity display range; unset ends default to the min / max
  /// similarity among retained edges.
  std::optional<double> s_lo;
  std::optional<double> s_hi;
  int label_decimals = 2;
  bool objective_coloring = true;
  std::string uniform_color = "#9E9E9E";
  double pixels_per_unit = 400.0;  // layout units -> SVG px

  friend bool operator==(const StyleSpec&, const StyleSpec&) = default;
};

/// The default color for objective k (0-based).
std::string default_color(std::size_t k);
std::string palette_color(const StyleSpec& spec, std::size_t k);

/// Throws InvalidStyle for malformed sizes, colors or palettes shorter than
/// `objective_count`; InvalidRange for a bad explicit similarity range.
void validate(const StyleSpec& spec, std::size_t objective_count);

/// Opacity of an objective sector. The best value (lowest when minimizing,
/// highest when maximizing) is fully opaque, the worst fully transparent;
/// a constant objective renders opaque.
double sector_alpha(double value, double f_min, double f_max, Sense sense);

struct DisplayRange {
  double lo = 0.0;
  double hi = 1.0;
  friend bool operator==(const DisplayRange&, const DisplayRange&) = default;
};

/// Explicit range from `spec`, with unset ends taken from the edges.
DisplayRange resolve_display_range(const StyleSpec& spec, const MoGram& graph);

/// Affine map of the clamped similarity onto [thickness_min, thickness_max].
/// A degenerate range (lo == hi) maps everything to thickness_max.
double edge_thickness(double similarity, const StyleSpec& spec, DisplayRange range);
/// Uses spec.s_lo / spec.s_hi, which must both be set.
double edge_thickness(double similarity, const StyleSpec& spec);

std::string format_similarity(double similarity, int decimals);

struct Sector {
  std::string color;
  double alpha = 1.0;
  friend bool operator==(const Sector&, const Sector&) = default;
};

struct EdgeStyle {
  double thickness = 1.0;
  std::string label;
  friend bool operator==(const EdgeStyle&, const EdgeStyle&) = default;
};

struct StyledMoGram {
  /// Positions here are normalized: centroid at the origin, longer
  /// bounding-box side equal to the layout's desired diameter.
  LayoutedMoGram layout;
  std::vector<ObjectiveSpec> objectives;
  /// Objective values per node, in node order.
  std::vector<std::vector<double>> objective_values;
  /// n_obj sectors per node, or one uniform full-disc sector when objective
  /// coloring is off.
  std::vector<std::vector<Sector>> node_sectors;
  /// Parallel to layout.graph.edges().
  std::vector<EdgeStyle> edge_styles;
  DisplayRange display_range;
  bool uniform = false;

  friend bool operator==(const StyledMoGram&, const StyledMoGram&) = default;
};

/// Matches layout nodes to solutions by id (labels). Throws ArityMismatch if
/// a node has no solution or the objective counts disagree.
StyledMoGram style(const LayoutedMoGram& layout, const SolutionSet& set, const StyleSpec& spec,
                   double desired_diameter = 1.0);

}  // namespace mogram
