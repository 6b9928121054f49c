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

// Kamada-Kawai stress layout in two dimensions.
//
// Ideal lengths are proportional to graph-theoretic distances:
//   l_ij = L * d_ij,  L = L0 / max d,   k_ij = K / d_ij^2
//   E = sum_{i<j} k_ij / 2 * (|p_i - p_j| - l_ij)^2
// The optimizer repeatedly picks the node with the largest gradient norm
// and relaxes it with damped 2-D Newton steps.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mogram/model.hpp"

namespace mogram {

enum class DistanceMode {
  weighted,  // edge length 1 - similarity
  hops,      // every edge has length 1
};

struct LayoutParams {
  double desired_diameter = 1.0;  // L0
  double spring_constant = 1.0;   // K
  double tolerance = 1e-4;        // on the per-node gradient norm
  std::optional<int> max_outer_iterations;  // unset: 100 * n
  int max_newton_steps = 50;
  std::uint64_t seed = 1;
  DistanceMode distance_mode = DistanceMode::weighted;

  friend bool operator==(const LayoutParams&, const LayoutParams&) = default;
};

void validate(const LayoutParams& params);
int outer_iteration_cap(const LayoutParams& params, std::size_t n);

/// Shortest edge length allowed; edges of similarity 1 get this length.
inline constexpr double kMinEdgeLength = 1e-6;

/// All-pairs shortest paths over the retained edges. Throws Disconnected
/// naming the components if the graph is not connected.
SquareMatrix graph_distances(const MoGram& graph, DistanceMode mode = DistanceMode::weighted);

class StressModel {
 public:
  /// `distances` must be symmetric with positive off-diagonal entries.
  StressModel(const SquareMatrix& distances, double desired_diameter, double spring_constant);

  std::size_t size() const noexcept { return ideal_.size(); }
  double ideal_length(std::size_t i, std::size_t j) const { return ideal_(i, j); }
  double strength(std::size_t i, std::size_t j) const { return strength_(i, j); }

  double energy(std::span<const Point> positions) const;
  /// dE/dp_m.
  Point gradient(std::size_t m, std::span<const Point> positions) const;
  /// Second derivatives with respect to p_m: {xx, xy, yy}.
  std::array<double, 3> hessian(std::size_t m, std::span<const Point> positions) const;

 private:
  SquareMatrix ideal_;
  SquareMatrix strength_;
};

/// Circle of radius L0/2 in index order, plus a seeded jitter of 1e-3 L0.
std::vector<Point> initial_placement(std::size_t n, const LayoutParams& params);

/// One record per accepted node move.
struct StepRecord {
  std::size_t node = 0;
  double energy_before = 0.0;
  double energy_after = 0.0;
};

/// Positions are the raw optimizer output (not normalized). When `trace` is
/// given every accepted step is appended to it.
LayoutedMoGram kamada_kawai(const MoGram& graph, const LayoutParams& params,
                            std::vector<StepRecord>* trace = nullptr);

/// Centroid to the origin, bounding box's longer side scaled to `extent`.
std::vector<Point> normalize_positions(std::span<const Point> positions, double extent);

}  // namespace mogram
