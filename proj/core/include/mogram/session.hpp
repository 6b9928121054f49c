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

// Decision-maker sessions: a solution set plus the current moGram, mutated
// by exclusions and restyling. Exclusions rerun network scaling and layout
// on the cached similarity submatrix; restyling never moves nodes.

#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mogram/pipeline.hpp"

namespace mogram {

/// Everything POST /sessions accepts.
struct CreateRequest {
  SolutionSet set;
  MetricChoice metric = TsalbpLineMetric{};
  PipelineParams params;
};

/// Parses {"solution_set", "metric"?, "matrix"?, "pathfinder"?, "layout"?,
/// "style"?}. The metric defaults to the one matching the payloads.
CreateRequest parse_create_request(const nlohmann::json& body);
nlohmann::json to_json(const CreateRequest& request);

/// Partial style change as posted to /style.
struct StyleUpdate {
  std::optional<double> s_lo;
  std::optional<double> s_hi;
  std::optional<bool> objective_coloring;
  std::optional<int> label_decimals;
};

StyleUpdate parse_style_update(const nlohmann::json& body);
nlohmann::json to_json(const StyleUpdate& update);

struct SessionState {
  SolutionSet base_set;
  MetricChoice metric;
  SimilarityMatrix base_matrix;
  PipelineParams params;      // params.style holds the current style
  StyleSpec initial_style;    // restored by reset
  std::set<int> excluded;
  LayoutedMoGram layout;      // raw optimizer output for the shown nodes
  StyledMoGram current;
};

SessionState create_session(const CreateRequest& request);

/// Adds `ids` to the exclusion set and regenerates. An empty or
/// already-excluded set of ids leaves the state untouched. Throws UnknownId
/// or TooFewRemaining.
SessionState exclude_nodes(SessionState state, const std::vector<int>& ids);

/// Restyle only. Throws InvalidRange unless 0 <= s_lo < s_hi <= 1.
SessionState set_similarity_display_range(SessionState state, double s_lo, double s_hi);
SessionState set_objective_coloring(SessionState state, bool enabled);
SessionState apply_style_update(SessionState state, const StyleUpdate& update);

/// Clears exclusions and style overrides.
SessionState reset_session(SessionState state);

/// {"nodes": [...], "edges": [...], "meta": {...}}
nlohmann::json view_json(const SessionState& state);
std::string view_svg(const SessionState& state);
std::string view_dot(const SessionState& state);

/// A session shared between request handlers. Mutations are serialized;
/// reads run concurrently on a consistent snapshot. Every mutation is
/// appended to an operation log that `replay` can reapply.
class Session {
 public:
  explicit Session(const CreateRequest& request);

  void exclude(const std::vector<int>& ids);
  void update_style(const StyleUpdate& update);
  void reset();

  SessionState snapshot() const;
  nlohmann::json view() const;
  /// format: json, svg or dot.
  std::string view_text(const std::string& format) const;
  nlohmann::json operation_log() const;
  const nlohmann::json& create_request() const { return create_request_; }

  /// Fresh session from `create_request`, then every logged operation in order.
  static std::unique_ptr<Session> replay(const nlohmann::json& create_request, const nlohmann::json& log);

 private:
  void apply_logged(const nlohmann::json& op);

  nlohmann::json create_request_;
  mutable std::shared_mutex mutex_;
  SessionState state_;
  nlohmann::json log_ = nlohmann::json::array();
};

}  // namespace mogram
