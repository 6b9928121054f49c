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

#include "mogram/session.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <fmt/format.h>

#include "mogram/error.hpp"
#include "mogram/io.hpp"
#include "mogram/render.hpp"

namespace mogram {

using nlohmann::json;

namespace {

[[noreturn]] void bad_request(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, fmt::format("{}: {}", where, what), where);
}

void only_fields(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) bad_request(where, "expected an object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      bad_request(where, fmt::format("unknown field '{}'", item.key()));
    }
  }
}

double number_at(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number()) bad_request(fmt::format("{}.{}", where, key), "expected a number");
  return v.get<double>();
}

int int_at(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) bad_request(fmt::format("{}.{}", where, key), "expected an integer");
  return v.get<int>();
}

bool bool_at(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_boolean()) bad_request(fmt::format("{}.{}", where, key), "expected a boolean");
  return v.get<bool>();
}

PathfinderParams parse_pathfinder(const json& v) {
  only_fields(v, "$.pathfinder", {"r", "q"});
  PathfinderParams p;
  if (v.contains("r")) {
    const auto& r = v.at("r");
    if (r.is_string()) {
      p.r = parse_r(r.get<std::string>());
    } else if (r.is_number()) {
      p.r = r.get<double>();
    } else {
      bad_request("$.pathfinder.r", "expected a number or \"inf\"");
    }
  }
  if (v.contains("q")) {
    const auto& q = v.at("q");
    if (q.is_string()) {
      p.q = parse_q(q.get<std::string>());
    } else if (q.is_number_integer()) {
      p.q = q.get<int>();
    } else {
      bad_request("$.pathfinder.q", "expected an integer or \"auto\"");
    }
  }
  return p;
}

LayoutParams parse_layout(const json& v) {
  const std::string where = "$.layout";
  only_fields(v, where,
              {"desired_diameter", "spring_constant", "tolerance", "max_outer_iterations", "max_newton_steps",
               "seed", "distance_mode"});
  LayoutParams p;
  if (v.contains("desired_diameter")) p.desired_diameter = number_at(v, "desired_diameter", where);
  if (v.contains("spring_constant")) p.spring_constant = number_at(v, "spring_constant", where);
  if (v.contains("tolerance")) p.tolerance = number_at(v, "tolerance", where);
  if (v.contains("max_outer_iterations")) p.max_outer_iterations = int_at(v, "max_outer_iterations", where);
  if (v.contains("max_newton_steps")) p.max_newton_steps = int_at(v, "max_newton_steps", where);
  if (v.contains("seed")) {
    if (!v.at("seed").is_number_unsigned()) bad_request(where + ".seed", "expected a non-negative integer");
    p.seed = v.at("seed").get<std::uint64_t>();
  }
  if (v.contains("distance_mode")) {
    const auto& m = v.at("distance_mode");
    if (m == "weighted") {
      p.distance_mode = DistanceMode::weighted;
    } else if (m == "hops") {
      p.distance_mode = DistanceMode::hops;
    } else {
      bad_request(where + ".distance_mode", "expected \"weighted\" or \"hops\"");
    }
  }
  return p;
}

StyleSpec parse_style(const json& v) {
  const std::string where = "$.style";
  only_fields(v, where,
              {"palette", "node_radius", "thickness_min", "thickness_max", "s_lo", "s_hi", "label_decimals",
               "objective_coloring", "uniform_color", "pixels_per_unit"});
  StyleSpec s;
  if (v.contains("palette")) {
    for (const auto& c : v.at("palette")) {
      if (!c.is_string()) bad_request(where + ".palette", "expected color strings");
      s.palette.push_back(c.get<std::string>());
    }
  }
  if (v.contains("node_radius")) s.node_radius = number_at(v, "node_radius", where);
  if (v.contains("thickness_min")) s.thickness_min = number_at(v, "thickness_min", where);
  if (v.contains("thickness_max")) s.thickness_max = number_at(v, "thickness_max", where);
  if (v.contains("s_lo")) s.s_lo = number_at(v, "s_lo", where);
  if (v.contains("s_hi")) s.s_hi = number_at(v, "s_hi", where);
  if (v.contains("label_decimals")) s.label_decimals = int_at(v, "label_decimals", where);
  if (v.contains("objective_coloring")) s.objective_coloring = bool_at(v, "objective_coloring", where);
  if (v.contains("uniform_color")) {
    if (!v.at("uniform_color").is_string()) bad_request(where + ".uniform_color", "expected a string");
    s.uniform_color = v.at("uniform_color").get<std::string>();
  }
  if (v.contains("pixels_per_unit")) s.pixels_per_unit = number_at(v, "pixels_per_unit", where);
  return s;
}

json to_json(const PathfinderParams& p) {
  json out = {{"r", std::isinf(p.r) ? json("inf") : json(p.r)}};
  out["q"] = p.q ? json(*p.q) : json("auto");
  return out;
}

json to_json(const LayoutParams& p) {
  json out = {{"desired_diameter", p.desired_diameter}, {"spring_constant", p.spring_constant},
              {"tolerance", p.tolerance},               {"max_newton_steps", p.max_newton_steps},
              {"seed", p.seed},
              {"distance_mode", p.distance_mode == DistanceMode::hops ? "hops" : "weighted"}};
  if (p.max_outer_iterations) out["max_outer_iterations"] = *p.max_outer_iterations;
  return out;
}

json to_json(const StyleSpec& s) {
  json out = {{"node_radius", s.node_radius},
              {"thickness_min", s.thickness_min},
              {"thickness_max", s.thickness_max},
              {"label_decimals", s.label_decimals},
              {"objective_coloring", s.objective_coloring},
              {"uniform_color", s.uniform_color},
              {"pixels_per_unit", s.pixels_per_unit}};
  if (!s.palette.empty()) out["palette"] = s.palette;
  if (s.s_lo) out["s_lo"] = *s.s_lo;
  if (s.s_hi) out["s_hi"] = *s.s_hi;
  return out;
}

void restyle(SessionState& s) {
  s.current = style(s.layout, s.base_set, s.params.style, s.params.layout.desired_diameter);
}

void regenerate(SessionState& s) {
  std::vector<std::size_t> keep;
  std::vector<int> labels;
  for (std::size_t i = 0; i < s.base_set.solutions.size(); ++i) {
    const int id = s.base_set.solutions[i].id;
    if (s.excluded.count(id) == 0) {
      keep.push_back(i);
      labels.push_back(id);
    }
  }
  s.layout = prune_and_layout(s.base_matrix.restricted_to(keep), std::move(labels), s.params);
  restyle(s);
}

}  // namespace

CreateRequest parse_create_request(const json& body) {
  only_fields(body, "$", {"solution_set", "metric", "matrix", "pathfinder", "layout", "style"});
  if (!body.contains("solution_set")) bad_request("$", "missing field 'solution_set'");
  CreateRequest req;
  req.set = parse_solution_set(body.at("solution_set"));

  std::optional<std::string> name;
  if (body.contains("metric")) {
    if (!body.at("metric").is_string()) bad_request("$.metric", "expected a string");
    name = body.at("metric").get<std::string>();
  }
  if (name == "precomputed" || (!name && body.contains("matrix"))) {
    if (!body.contains("matrix")) bad_request("$", "metric 'precomputed' requires field 'matrix'");
    req.metric = PrecomputedMetric{parse_similarity_matrix(body.at("matrix"))};
  } else if (name) {
    if (body.contains("matrix")) bad_request("$.matrix", "a matrix is only accepted with metric 'precomputed'");
    req.metric = metric_from_name(*name);
  } else {
    req.metric = default_metric_for(req.set.payload_kind());
  }

  if (body.contains("pathfinder")) req.params.pathfinder = parse_pathfinder(body.at("pathfinder"));
  if (body.contains("layout")) req.params.layout = parse_layout(body.at("layout"));
  if (body.contains("style")) req.params.style = parse_style(body.at("style"));
  return req;
}

json to_json(const CreateRequest& request) {
  json out = {{"solution_set", to_json(request.set)},
              {"metric", std::string(metric_name(request.metric))},
              {"pathfinder", to_json(request.params.pathfinder)},
              {"layout", to_json(request.params.layout)},
              {"style", to_json(request.params.style)}};
  if (const auto* pre = std::get_if<PrecomputedMetric>(&request.metric)) out["matrix"] = to_json(pre->matrix);
  return out;
}

StyleUpdate parse_style_update(const json& body) {
  const std::string where = "$";
  only_fields(body, where, {"s_lo", "s_hi", "objective_coloring", "label_decimals"});
  StyleUpdate u;
  if (body.contains("s_lo")) u.s_lo = number_at(body, "s_lo", where);
  if (body.contains("s_hi")) u.s_hi = number_at(body, "s_hi", where);
  if (body.contains("objective_coloring")) u.objective_coloring = bool_at(body, "objective_coloring", where);
  if (body.contains("label_decimals")) u.label_decimals = int_at(body, "label_decimals", where);
  return u;
}

json to_json(const StyleUpdate& u) {
  json out = json::object();
  if (u.s_lo) out["s_lo"] = *u.s_lo;
  if (u.s_hi) out["s_hi"] = *u.s_hi;
  if (u.objective_coloring) out["objective_coloring"] = *u.objective_coloring;
  if (u.label_decimals) out["label_decimals"] = *u.label_decimals;
  return out;
}

SessionState create_session(const CreateRequest& request) {
  PipelineResult first = run_pipeline(request.set, request.metric, request.params);
  return SessionState{request.set,
                      request.metric,
                      std::move(first.similarity),
                      request.params,
                      request.params.style,
                      {},
                      std::move(first.layout),
                      std::move(first.styled)};
}

SessionState exclude_nodes(SessionState state, const std::vector<int>& ids) {
  const auto known = state.base_set.ids();
  std::set<int> next = state.excluded;
  for (int id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw Error(ErrorCode::UnknownId, fmt::format("no solution with id {}", id), fmt::format("id {}", id));
    }
    next.insert(id);
  }
  if (next == state.excluded) return state;
  const std::size_t remaining = known.size() - next.size();
  if (remaining < 2) {
    throw Error(ErrorCode::TooFewRemaining,
                fmt::format("excluding {} of {} solutions leaves {}; at least 2 must remain", next.size(),
                            known.size(), remaining),
                fmt::format("remaining {}", remaining));
  }
  state.excluded = std::move(next);
  regenerate(state);
  return state;
}

SessionState set_similarity_display_range(SessionState state, double s_lo, double s_hi) {
  if (!(s_lo >= 0.0 && s_lo < s_hi && s_hi <= 1.0)) {
    throw Error(ErrorCode::InvalidRange,
                fmt::format("similarity range [{}, {}] must satisfy 0 <= s_lo < s_hi <= 1", s_lo, s_hi));
  }
  state.params.style.s_lo = s_lo;
  state.params.style.s_hi = s_hi;
  restyle(state);
  return state;
}

SessionState set_objective_coloring(SessionState state, bool enabled) {
  if (state.params.style.objective_coloring == enabled) return state;
  state.params.style.objective_coloring = enabled;
  restyle(state);
  return state;
}

SessionState apply_style_update(SessionState state, const StyleUpdate& update) {
  if (update.s_lo || update.s_hi) {
    const auto range = state.current.display_range;
    state = set_similarity_display_range(std::move(state), update.s_lo.value_or(range.lo),
                                         update.s_hi.value_or(range.hi));
  }
  if (update.objective_coloring) state = set_objective_coloring(std::move(state), *update.objective_coloring);
  if (update.label_decimals) {
    StyleSpec next = state.params.style;
    next.label_decimals = *update.label_decimals;
    validate(next, state.base_set.objective_count());
    state.params.style = next;
    restyle(state);
  }
  return state;
}

SessionState reset_session(SessionState state) {
  const bool regenerate_needed = !state.excluded.empty();
  state.excluded.clear();
  state.params.style = state.initial_style;
  if (regenerate_needed) {
    regenerate(state);
  } else {
    restyle(state);
  }
  return state;
}

json view_json(const SessionState& state) {
  const auto& styled = state.current;
  const auto& graph = styled.layout.graph;
  json nodes = json::array();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    json sectors = json::array();
    for (const auto& s : styled.node_sectors[i]) sectors.push_back({{"color", s.color}, {"alpha", s.alpha}});
    nodes.push_back({{"id", graph.labels()[i]},
                     {"x", styled.layout.positions[i].x},
                     {"y", styled.layout.positions[i].y},
                     {"sectors", sectors},
                     {"objectives", styled.objective_values[i]}});
  }
  json edges = json::array();
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const auto& e = graph.edges()[k];
    edges.push_back({{"a", graph.labels()[e.a]},
                     {"b", graph.labels()[e.b]},
                     {"sim", e.similarity},
                     {"thickness", styled.edge_styles[k].thickness},
                     {"label", styled.edge_styles[k].label}});
  }
  json objectives = json::array();
  for (std::size_t k = 0; k < styled.objectives.size(); ++k) {
    const auto& o = styled.objectives[k];
    objectives.push_back({{"name", o.name},
                          {"sense", std::string(to_string(o.sense))},
                          {"color", palette_color(state.params.style, k)}});
  }
  const auto& report = styled.layout.report;
  json meta = {
      {"node_count", graph.size()},
      {"edge_count", graph.edge_count()},
      {"objectives", objectives},
      {"excluded", std::vector<int>(state.excluded.begin(), state.excluded.end())},
      {"metric", std::string(metric_name(state.metric))},
      {"pathfinder", to_json(state.params.pathfinder)},
      {"layout",
       {{"iterations", report.iterations},
        {"max_gradient", report.max_gradient},
        {"energy", report.energy},
        {"status", std::string(to_string(report.status))}}},
      {"display_range", {{"s_lo", styled.display_range.lo}, {"s_hi", styled.display_range.hi}}},
      {"objective_coloring", !styled.uniform},
      {"uniform_color", state.params.style.uniform_color},
      {"thickness_range", {state.params.style.thickness_min, state.params.style.thickness_max}},
      {"label_decimals", state.params.style.label_decimals},
  };
  return {{"nodes", nodes}, {"edges", edges}, {"meta", meta}};
}

std::string view_svg(const SessionState& state) { return emit_svg(state.current, state.params.style); }

std::string view_dot(const SessionState& state) { return emit_dot(state.current, state.params.style); }

Session::Session(const CreateRequest& request)
    : create_request_(to_json(request)), state_(create_session(request)) {}

void Session::exclude(const std::vector<int>& ids) {
  std::unique_lock lock(mutex_);
  state_ = exclude_nodes(state_, ids);
  log_.push_back({{"op", "exclude"}, {"ids", ids}});
}

void Session::update_style(const StyleUpdate& update) {
  std::unique_lock lock(mutex_);
  state_ = apply_style_update(state_, update);
  log_.push_back({{"op", "style"}, {"update", to_json(update)}});
}

void Session::reset() {
  std::unique_lock lock(mutex_);
  state_ = reset_session(state_);
  log_.push_back({{"op", "reset"}});
}

SessionState Session::snapshot() const {
  std::shared_lock lock(mutex_);
  return state_;
}

json Session::view() const {
  std::shared_lock lock(mutex_);
  return view_json(state_);
}

std::string Session::view_text(const std::string& format) const {
  std::shared_lock lock(mutex_);
  if (format == "svg") return view_svg(state_);
  if (format == "dot") return view_dot(state_);
  if (format == "json") return view_json(state_).dump();
  throw Error(ErrorCode::InvalidParameter, fmt::format("unknown view format '{}'", format), format);
}

json Session::operation_log() const {
  std::shared_lock lock(mutex_);
  return log_;
}

void Session::apply_logged(const json& op) {
  const auto kind = op.at("op").get<std::string>();
  if (kind == "exclude") {
    exclude(op.at("ids").get<std::vector<int>>());
  } else if (kind == "style") {
    update_style(parse_style_update(op.at("update")));
  } else if (kind == "reset") {
    reset();
  } else {
    throw Error(ErrorCode::ParseError, fmt::format("unknown logged operation '{}'", kind));
  }
}

std::unique_ptr<Session> Session::replay(const json& create_request, const json& log) {
  auto session = std::make_unique<Session>(parse_create_request(create_request));
  for (const auto& op : log) session->apply_logged(op);
  return session;
}

}  // namespace mogram
