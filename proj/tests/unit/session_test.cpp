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

#include <gtest/gtest.h>

#include "mogram/error.hpp"
#include "mogram/io.hpp"
#include "mogram/render.hpp"
#include "mogram/session.hpp"
#include "support/oracles.hpp"

namespace mogram {
namespace {

using nlohmann::json;

CreateRequest toy_request() {
  return {load_solution_set(testing::fixture("toy_solutions.json")), PrecomputedMetric{testing::s_toy()}, {}};
}

CreateRequest fixture_request(const std::string& name) {
  auto set = load_solution_set(testing::fixture(name));
  auto metric = default_metric_for(set.payload_kind());
  return {std::move(set), std::move(metric), {}};
}

ErrorCode code_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::ParseError;
}

TEST(SessionState, CreateToy) {
  const auto s = create_session(toy_request());
  EXPECT_EQ(s.current.layout.graph.labeled_edges(), testing::toy_edges());
  EXPECT_TRUE(s.excluded.empty());
}

TEST(SessionState, CreateTwoSolutions) {
  SolutionSet set;
  set.objectives = {{"f1", Sense::minimize}};
  set.pool_size = 2;
  set.solutions = {{1, {1.0}, BinaryString{{1, 0}}}, {2, {2.0}, BinaryString{{0, 1}}}};
  const auto s = create_session({set, HammingMetric{}, {}});
  ASSERT_EQ(s.current.layout.graph.edge_count(), 1u);
  EXPECT_EQ(s.current.layout.graph.edges()[0].similarity, 0.0);
}

TEST(SessionState, MetricMismatchIsAnInputError) {
  auto req = toy_request();
  req.metric = HammingMetric{};
  try {
    create_session(req);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MetricPayloadMismatch);
    ASSERT_TRUE(e.phase().has_value());
    EXPECT_EQ(*e.phase(), Phase::similarity);
  }
}

TEST(SessionState, ExcludeMatchesSubmatrixOracle) {
  const auto s = exclude_nodes(create_session(toy_request()), {4, 6});
  const std::vector<int> labels{1, 2, 3, 5, 7};
  const auto sub = to_distance(testing::s_toy().restricted_to({0, 1, 2, 4, 6}));
  EXPECT_EQ(s.current.layout.graph, testing::pathfinder_oracle(sub, {}, labels));
  EXPECT_EQ(s.layout.graph.labels(), labels);

  // A fresh run over the remaining solutions, renumbered 1..5, gives the same mogram.
  auto set = load_solution_set(testing::fixture("toy_solutions.json"));
  SolutionSet rest{set.objectives, {}, std::nullopt};
  int next_id = 1;
  for (const auto& sol : set.solutions) {
    if (sol.id != 4 && sol.id != 6) rest.solutions.push_back({next_id++, sol.objectives, sol.design});
  }
  const auto fresh = create_session({rest, PrecomputedMetric{testing::s_toy().restricted_to({0, 1, 2, 4, 6})}, {}});
  EXPECT_EQ(fresh.layout.graph.edges(), s.layout.graph.edges());
  EXPECT_EQ(fresh.layout.positions, s.layout.positions);
  EXPECT_EQ(fresh.current.node_sectors, s.current.node_sectors);
}

TEST(SessionState, ExcludeRecomputesFromPayloads) {
  auto req = fixture_request("ensembles_15.json");
  const auto s = exclude_nodes(create_session(req), {2, 9, 11});
  SolutionSet rest = req.set;
  std::erase_if(rest.solutions, [](const FrontSolution& f) { return f.id == 2 || f.id == 9 || f.id == 11; });
  int next_id = 1;
  for (auto& sol : rest.solutions) sol.id = next_id++;
  const auto fresh = run_pipeline(rest, HammingMetric{}, {});
  EXPECT_EQ(fresh.layout.graph.edges(), s.layout.graph.edges());
  EXPECT_EQ(fresh.layout.positions, s.layout.positions);
  EXPECT_EQ(fresh.layout.report, s.layout.report);
  EXPECT_EQ(fresh.styled.edge_styles, s.current.edge_styles);
  EXPECT_EQ(fresh.styled.node_sectors, s.current.node_sectors);
}

TEST(SessionState, ExclusionAccumulates) {
  auto s = exclude_nodes(create_session(toy_request()), {4});
  s = exclude_nodes(std::move(s), {6});
  EXPECT_EQ(s.excluded, (std::set<int>{4, 6}));
  EXPECT_EQ(s.layout, exclude_nodes(create_session(toy_request()), {4, 6}).layout);
}

TEST(SessionState, ExcludeNothingIsANoOp) {
  const auto s = create_session(toy_request());
  const auto same = exclude_nodes(s, {});
  EXPECT_EQ(same.current, s.current);
}

TEST(SessionState, ExclusionErrors) {
  const auto s = create_session(toy_request());
  EXPECT_EQ(code_of([&] { exclude_nodes(s, {1, 2, 3, 4, 5, 6}); }), ErrorCode::TooFewRemaining);
  EXPECT_EQ(code_of([&] { exclude_nodes(s, {42}); }), ErrorCode::UnknownId);
  EXPECT_NO_THROW(exclude_nodes(s, {1, 2, 3, 4, 5}));
}

TEST(SessionState, DisplayRangeRescalesEnsembleEdges) {
  auto s = create_session(fixture_request("ensembles_15.json"));
  s = set_similarity_display_range(std::move(s), 0.86, 0.95);
  const StyleSpec spec;
  const auto& g = s.current.layout.graph;
  bool saw_lo = false, saw_hi = false;
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const double sim = g.edges()[k].similarity;
    const double t = s.current.edge_styles[k].thickness;
    EXPECT_GE(sim, 0.86);
    EXPECT_LE(sim, 0.95);
    if (sim == 0.86) {
      EXPECT_EQ(t, spec.thickness_min);
      saw_lo = true;
    }
    if (sim == 0.95) {
      EXPECT_EQ(t, spec.thickness_max);
      saw_hi = true;
    }
  }
  EXPECT_TRUE(saw_lo && saw_hi);

  s = set_similarity_display_range(std::move(s), 0.0, 1.0);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const double expected = spec.thickness_min + (spec.thickness_max - spec.thickness_min) * g.edges()[k].similarity;
    EXPECT_NEAR(s.current.edge_styles[k].thickness, expected, 1e-12);
  }
}

TEST(SessionState, InvalidRange) {
  const auto s = create_session(toy_request());
  EXPECT_EQ(code_of([&] { set_similarity_display_range(s, 0.9, 0.2); }), ErrorCode::InvalidRange);
  EXPECT_EQ(code_of([&] { set_similarity_display_range(s, 0.5, 0.5); }), ErrorCode::InvalidRange);
  EXPECT_EQ(code_of([&] { set_similarity_display_range(s, -0.1, 0.5); }), ErrorCode::InvalidRange);
}

TEST(SessionState, ColoringToggleRoundTrips) {
  const auto s = create_session(toy_request());
  const auto off = set_objective_coloring(s, false);
  EXPECT_TRUE(off.current.uniform);
  EXPECT_EQ(off.current.node_sectors[0].size(), 1u);
  const auto on = set_objective_coloring(off, true);
  EXPECT_EQ(on.current, s.current);
}

TEST(SessionState, RestyleKeepsLayout) {
  const auto s = create_session(fixture_request("queries_26.json"));
  StyleUpdate update;
  update.s_lo = 0.2;
  update.s_hi = 0.9;
  update.objective_coloring = false;
  update.label_decimals = 3;
  const auto t = apply_style_update(s, update);
  EXPECT_EQ(t.current.layout.graph, s.current.layout.graph);
  EXPECT_EQ(t.current.layout.positions, s.current.layout.positions);
  EXPECT_EQ(t.layout, s.layout);
  EXPECT_EQ(t.current.edge_styles[0].label.size(), 5u);
}

TEST(SessionState, ResetRestoresInitialView) {
  const auto s = create_session(toy_request());
  auto t = exclude_nodes(s, {3});
  t = set_objective_coloring(std::move(t), false);
  t = reset_session(std::move(t));
  EXPECT_EQ(t.current, s.current);
  EXPECT_TRUE(t.excluded.empty());
}

TEST(SessionState, ViewJson) {
  const auto v = view_json(create_session(toy_request()));
  EXPECT_EQ(v["nodes"].size(), 7u);
  EXPECT_EQ(v["edges"].size(), 7u);
  EXPECT_EQ(v["meta"]["metric"], "precomputed");
  EXPECT_EQ(v["meta"]["objectives"][0]["color"], "#E69500");
  EXPECT_EQ(v["nodes"][0]["sectors"].size(), 2u);
  EXPECT_EQ(v["meta"]["layout"]["status"], "converged");
}

TEST(SessionState, SvgViewMatchesRenderer) {
  const auto s = create_session(toy_request());
  const auto direct = run_pipeline(toy_request().set, PrecomputedMetric{testing::s_toy()}, {});
  EXPECT_EQ(view_svg(s), emit_svg(direct.styled, {}));
}

TEST(CreateRequestJson, RoundTrip) {
  const auto req = toy_request();
  const auto back = parse_create_request(to_json(req));
  EXPECT_EQ(back.set, req.set);
  EXPECT_EQ(back.params, req.params);
  EXPECT_EQ(std::get<PrecomputedMetric>(back.metric).matrix, testing::s_toy());
}

TEST(CreateRequestJson, DefaultsMetricFromPayload) {
  json body = {{"solution_set", to_json(load_solution_set(testing::fixture("queries_26.json")))}};
  EXPECT_EQ(metric_name(parse_create_request(body).metric), "levenshtein");
  body["colour"] = "red";
  EXPECT_EQ(code_of([&] { parse_create_request(body); }), ErrorCode::ParseError);
}

TEST(Session, ReplayReproducesView) {
  Session session(fixture_request("ensembles_15.json"));
  session.exclude({3});
  StyleUpdate update;
  update.s_lo = 0.5;
  session.update_style(update);
  session.exclude({7, 8});
  update = {};
  update.objective_coloring = false;
  session.update_style(update);
  const auto replayed = Session::replay(session.create_request(), session.operation_log());
  EXPECT_EQ(replayed->view(), session.view());
  EXPECT_EQ(replayed->view_text("svg"), session.view_text("svg"));
  EXPECT_EQ(session.operation_log().size(), 4u);
}

TEST(Session, FailedOperationsAreNotLogged) {
  Session session(toy_request());
  EXPECT_THROW(session.exclude({99}), Error);
  EXPECT_TRUE(session.operation_log().empty());
  EXPECT_THROW(session.view_text("png"), Error);
}

}  // namespace
}  // namespace mogram
