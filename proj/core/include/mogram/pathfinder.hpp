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

// Pathfinder network scaling: prune a complete dissimilarity graph down to
// the edges that no alternative path of at most q edges beats under the
// Minkowski-r path cost.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mogram/model.hpp"

namespace mogram {

struct PathfinderParams {
  /// Minkowski exponent, >= 1; infinity means the path cost is its largest edge.
  double r = std::numeric_limits<double>::infinity();
  /// Longest alternative path considered, >= 2. Unset means n - 1.
  std::optional<int> q;

  friend bool operator==(const PathfinderParams&, const PathfinderParams&) = default;
};

/// Throws InvalidParameter unless r >= 1 (or infinite) and q, if set, is >= 2.
void validate(const PathfinderParams& params);

/// The q actually used for an n-node graph: min(q, n - 1), with unset q
/// meaning n - 1.
int effective_q(const PathfinderParams& params, std::size_t n);

/// "inf" or the number; "auto" or the integer.
std::string format_r(double r);
double parse_r(const std::string& text);
std::optional<int> parse_q(const std::string& text);

/// d = 1 - s entrywise.
DistanceMatrix to_distance(const SimilarityMatrix& similarity);

/// Throws NonSymmetricInput, NegativeDistance or InvalidDistance (non-finite
/// entry or non-zero diagonal).
void check_distance_matrix(const DistanceMatrix& d);

/// Edge (i,j) survives iff d(i,j) <= the cheapest alternative path of at most
/// q edges; ties keep the edge. Retained edges carry similarity 1 - d.
/// `labels` defaults to 1..n.
MoGram pathfinder_prune(const DistanceMatrix& d, const PathfinderParams& params,
                        std::vector<int> labels = {});

/// Same result through the matrix-power recurrence regardless of
/// parameters; exposed for benchmarking against the spanning-forest route.
MoGram pathfinder_prune_dp(const DistanceMatrix& d, const PathfinderParams& params,
                           std::vector<int> labels = {});

}  // namespace mogram
