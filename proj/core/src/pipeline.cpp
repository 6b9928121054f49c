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

#include "mogram/pipeline.hpp"

#include "mogram/error.hpp"

namespace mogram {

namespace {

template <typename Fn>
auto in_phase(Phase phase, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw e.in_phase(phase);
  }
}

}  // namespace

void validate(const PipelineParams& params, std::size_t objective_count) {
  in_phase(Phase::pathfinder, [&] { validate(params.pathfinder); return 0; });
  in_phase(Phase::layout, [&] { validate(params.layout); return 0; });
  in_phase(Phase::styling, [&] { validate(params.style, objective_count); return 0; });
}

LayoutedMoGram prune_and_layout(const SimilarityMatrix& similarity, std::vector<int> labels,
                                const PipelineParams& params) {
  MoGram graph = in_phase(Phase::pathfinder, [&] {
    return pathfinder_prune(to_distance(similarity), params.pathfinder, std::move(labels));
  });
  return in_phase(Phase::layout, [&] { return kamada_kawai(graph, params.layout); });
}

PipelineResult run_pipeline(const SolutionSet& set, const MetricChoice& metric, const PipelineParams& params) {
  const SolutionSet valid = in_phase(Phase::input, [&] { return validate_solution_set(set); });
  validate(params, valid.objective_count());
  SimilarityMatrix similarity = in_phase(Phase::similarity, [&] { return build_similarity_matrix(valid, metric); });
  LayoutedMoGram layout = prune_and_layout(similarity, valid.ids(), params);
  StyledMoGram styled = in_phase(Phase::styling, [&] {
    return style(layout, valid, params.style, params.layout.desired_diameter);
  });
  return {std::move(similarity), std::move(layout), std::move(styled)};
}

}  // namespace mogram
