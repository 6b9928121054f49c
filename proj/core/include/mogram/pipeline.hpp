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

// The four generation phases run end to end: similarity matrix, network
// scaling, layout, styling. Errors escaping a phase carry its Phase tag.

#include <vector>

#include "mogram/layout.hpp"
#include "mogram/pathfinder.hpp"
#include "mogram/similarity.hpp"
#include "mogram/style.hpp"

namespace mogram {

struct PipelineParams {
  PathfinderParams pathfinder;
  LayoutParams layout;
  StyleSpec style;

  friend bool operator==(const PipelineParams&, const PipelineParams&) = default;
};

/// Throws the first invalid parameter as InvalidParameter / InvalidStyle /
/// InvalidRange.
void validate(const PipelineParams& params, std::size_t objective_count);

/// Phases 2-4 over a matrix whose rows follow `labels` (solution ids).
/// Returns the un-normalized layout; `style()` it to render.
LayoutedMoGram prune_and_layout(const SimilarityMatrix& similarity, std::vector<int> labels,
                                const PipelineParams& params);

struct PipelineResult {
  SimilarityMatrix similarity;
  LayoutedMoGram layout;
  StyledMoGram styled;
};

PipelineResult run_pipeline(const SolutionSet& set, const MetricChoice& metric, const PipelineParams& params);

}  // namespace mogram
