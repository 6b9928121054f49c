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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "mogram/error.hpp"
#include "mogram/io.hpp"
#include "mogram/model.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

namespace mogram {
namespace {

SolutionSet seven_binary() {
  SolutionSet set;
  set.objectives = {{"accuracy", Sense::maximize}, {"complexity", Sense::minimize}};
  set.pool_size = 4;
  const char* bits[] = {"1000", "1100", "1110", "1111", "0100", "0110", "0011"};
  for (int i = 0; i < 7; ++i) {
    BinaryString b;
    for (const char* c = bits[i]; *c; ++c) b.bits.push_back(*c == '1');
    set.solutions.push_back({i + 1, {0.5 + 0.05 * i, static_cast<double>(i)}, b});
  }
  return set;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

TEST(ValidateSolutionSet, AcceptsConsistentSet) {
  const SolutionSet set = seven_binary();
  EXPECT_EQ(validate_solution_set(set), set);
}

TEST(ValidateSolutionSet, DuplicateIdNamesTheId) {
  SolutionSet set = seven_binary();
  set.solutions[4].id = 3;
  try {
    validate_solution_set(set);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateId);
    EXPECT_EQ(e.detail(), "solution 3");
  }
}

TEST(ValidateSolutionSet, BinaryLengthMustMatchPool) {
  SolutionSet set = seven_binary();
  std::get<BinaryString>(set.solutions[2].design).bits.push_back(1);  // length 5, pool 4
  EXPECT_EQ(code_of([&] { validate_solution_set(set); }), ErrorCode::PayloadMismatch);
}

TEST(ValidateSolutionSet, TypedErrors) {
  SolutionSet arity = seven_binary();
  arity.solutions[1].objectives.pop_back();
  EXPECT_EQ(code_of([&] { validate_solution_set(arity); }), ErrorCode::ObjectiveArityMismatch);

  SolutionSet nonfinite = seven_binary();
  nonfinite.solutions[1].objectives[0] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(code_of([&] { validate_solution_set(nonfinite); }), ErrorCode::NonFiniteValue);

  SolutionSet mixed = seven_binary();
  mixed.solutions[6].design = TokenList{{"AND"}};
  EXPECT_EQ(code_of([&] { validate_solution_set(mixed); }), ErrorCode::PayloadMismatch);

  SolutionSet single = seven_binary();
  single.solutions.resize(1);
  EXPECT_EQ(code_of([&] { validate_solution_set(single); }), ErrorCode::TooFewSolutions);

  SolutionSet gap = seven_binary();
  gap.solutions[6].id = 9;
  EXPECT_EQ(code_of([&] { validate_solution_set(gap); }), ErrorCode::InvalidIds);

  SolutionSet names = seven_binary();
  names.objectives[1].name = "accuracy";
  EXPECT_EQ(code_of([&] { validate_solution_set(names); }), ErrorCode::InvalidObjectives);
}

TEST(ValidateSolutionSet, AssignmentTaskInTwoStations) {
  SolutionSet set;
  set.objectives = {{"stations", Sense::minimize}};
  set.solutions = {{1, {2}, Assignment{{{1, 2}, {3}}}}, {2, {3}, Assignment{{{1}, {2, 1}}}}};
  EXPECT_EQ(code_of([&] { validate_solution_set(set); }), ErrorCode::PayloadMismatch);
  set.solutions[1].design = Assignment{{{-1}, {2}}};
  EXPECT_EQ(code_of([&] { validate_solution_set(set); }), ErrorCode::PayloadMismatch);
}

// Malformed inputs of every shape end in exactly one typed error.
TEST(ValidateSolutionSet, TotalOnRandomMutations) {
  testing::Rng rng(7);
  std::uniform_int_distribution<int> which(0, 5);
  for (int round = 0; round < 300; ++round) {
    SolutionSet set = seven_binary();
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    auto& s = set.solutions[pick(rng)];
    switch (which(rng)) {
      case 0: s.id = static_cast<int>(pick(rng)) + 1; break;
      case 1: s.objectives.resize(pick(rng)); break;
      case 2: s.objectives.assign(2, std::numeric_limits<double>::infinity()); break;
      case 3: std::get<BinaryString>(s.design).bits.resize(pick(rng)); break;
      case 4: set.solutions.resize(pick(rng) % 3); break;
      default: set.pool_size = static_cast<int>(pick(rng)) - 1; break;
    }
    try {
      validate_solution_set(set);
    } catch (const Error&) {
    }
  }
}

TEST(SolutionSetJson, RoundTripsAllPayloadKinds) {
  testing::Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    SolutionSet set;
    set.objectives = {{"a", Sense::minimize}, {"b", Sense::maximize}};
    const int kind = round % 4;
    if (kind == 1) set.pool_size = 6;
    std::uniform_real_distribution<double> value(-1e6, 1e6);
    for (int id = 1; id <= 5; ++id) {
      DesignPayload design = NoDesign{};
      if (kind == 0) design = Assignment{testing::random_configuration(8, 4, rng)};
      if (kind == 1) design = BinaryString{testing::random_bits(6, rng)};
      if (kind == 2) design = TokenList{testing::random_tokens(5, {"AND", "OR", "t1", "t2"}, rng)};
      set.solutions.push_back({id, {value(rng), value(rng)}, design});
    }
    set = validate_solution_set(set);
    EXPECT_EQ(parse_solution_set_text(to_json(set).dump()), set);
  }
}

TEST(SolutionSetJson, RejectsUnknownFields) {
  auto doc = to_json(seven_binary());
  doc["solutions"][0]["colour"] = "red";
  try {
    parse_solution_set(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.detail(), "$.solutions[0]");
  }
  auto top = to_json(seven_binary());
  top["extra"] = 1;
  EXPECT_EQ(code_of([&] { parse_solution_set(top); }), ErrorCode::ParseError);
}

TEST(SolutionSetJson, ParsesToyFixture) {
  const auto set = load_solution_set(testing::fixture("toy_solutions.json"));
  EXPECT_EQ(set.size(), 7u);
  EXPECT_EQ(set.payload_kind(), PayloadKind::none);
}

TEST(SolutionSetJson, MissingFileNamesPath) {
  try {
    load_solution_set("/nonexistent/front.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/front.json"), std::string::npos);
  }
}

TEST(SolutionSetJson, EmptySolutionsRejected) {
  EXPECT_EQ(code_of([] {
              parse_solution_set_text(R"({"objectives":[{"name":"f","sense":"min"}],"solutions":[]})");
            }),
            ErrorCode::TooFewSolutions);
  EXPECT_EQ(code_of([] { parse_solution_set_text("{not json"); }), ErrorCode::ParseError);
}

TEST(SimilarityMatrixJson, ErrorsNameRowAndColumn) {
  auto doc = to_json(testing::s_toy());
  doc["values"][2][5] = 0.3;
  try {
    parse_similarity_matrix(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrecomputedInvalid);
    EXPECT_EQ(e.detail(), "row 3, column 6");
  }
  auto diag = to_json(testing::s_toy());
  diag["values"][0][0] = 0.9;
  EXPECT_EQ(code_of([&] { parse_similarity_matrix(diag); }), ErrorCode::PrecomputedInvalid);
  auto range = to_json(testing::s_toy());
  range["values"][0][1] = 1.5;
  range["values"][1][0] = 1.5;
  EXPECT_EQ(code_of([&] { parse_similarity_matrix(range); }), ErrorCode::PrecomputedInvalid);
  EXPECT_EQ(parse_similarity_matrix(to_json(testing::s_toy())), testing::s_toy());
}

TEST(MoGram, RejectsIsolatedNodes) {
  EXPECT_THROW(MoGram({1, 2, 3}, {{0, 1, 0.5}}), std::invalid_argument);
  const MoGram g({1, 2, 3}, {{1, 2, 0.5}, {0, 1, 0.4}});
  EXPECT_EQ(g.edges().front().a, 0u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

}  // namespace
}  // namespace mogram
