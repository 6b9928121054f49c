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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mogram/io.hpp"
#include "mogram/service.hpp"
#include "mogram/tools/cli.hpp"
#include "support/oracles.hpp"

namespace mogram {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mogram");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "mogram_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> toy_args() {
  return {"--input", testing::fixture("toy_solutions.json"), "--metric", "precomputed", "--matrix",
          testing::fixture("toy_matrix.json")};
}

TEST(Cli, RenderToyWritesEveryFormat) {
  auto args = toy_args();
  args.insert(args.begin(), "render");
  for (const char* name : {"toy.svg", "toy.dot", "toy.json"}) {
    args.push_back("--out");
    args.push_back(scratch(name).string());
  }
  const auto r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("edges: 7"), std::string::npos);
  EXPECT_NE(r.out.find("layout: converged"), std::string::npos);
  EXPECT_EQ(read_text_file(scratch("toy.dot")).rfind("graph mogram {", 0), 0u);
  const auto view = nlohmann::json::parse(read_text_file(scratch("toy.json")));
  EXPECT_EQ(view["edges"].size(), 7u);
}

TEST(Cli, SvgMatchesService) {
  auto args = toy_args();
  args.insert(args.begin(), "render");
  args.insert(args.end(), {"--out", scratch("cli.svg").string(), "--seed", "7", "--s-lo", "0.4"});
  ASSERT_EQ(run_cli(args).code, 0);

  SessionService service;
  nlohmann::json body = {{"solution_set", to_json(load_solution_set(testing::fixture("toy_solutions.json")))},
                         {"matrix", to_json(testing::s_toy())},
                         {"layout", {{"seed", 7}}},
                         {"style", {{"s_lo", 0.4}}}};
  const auto created = service.handle({"POST", "/sessions", {}, body.dump()});
  ASSERT_EQ(created.status, 201) << created.body;
  const auto id = nlohmann::json::parse(created.body)["session_id"].get<std::string>();
  const auto svg = service.handle({"GET", "/sessions/" + id + "/view", {{"format", "svg"}}, ""});
  EXPECT_EQ(read_text_file(scratch("cli.svg")), svg.body);
}

TEST(Cli, MissingInputNamesThePath) {
  const auto r = run_cli({"render", "--input", "/nonexistent/set.json", "--out", scratch("x.svg").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/nonexistent/set.json"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  const auto out = scratch("x.svg").string();
  const auto input = testing::fixture("tsalbp_13.json");
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", out, "--pf-q", "1"}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", out, "--pf-r", "0.5"}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", out, "--pf-r", "big"}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", out, "--s-lo", "0.9", "--s-hi", "0.1"}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", scratch("x.png").string()}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", out, "--metric", "cosine"}).code, 2);
  EXPECT_EQ(run_cli({"render", "--input", input, "--out", out, "--metric", "precomputed"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, DataErrors) {
  const auto empty = scratch("empty.json");
  std::ofstream(empty) << R"({"objectives":[{"name":"f1","sense":"min"}],"solutions":[]})";
  EXPECT_EQ(run_cli({"inspect", "--input", empty.string()}).code, 1);
  const auto r = run_cli({"render", "--input", testing::fixture("queries_26.json"), "--metric", "hamming", "--out",
                          scratch("x.svg").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MetricPayloadMismatch"), std::string::npos);
}

TEST(Cli, InspectToy) {
  auto args = toy_args();
  args.insert(args.begin(), "inspect");
  const auto r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);  // title
  std::getline(lines, line);  // column ids
  const auto s = testing::s_toy();
  for (std::size_t i = 0; i < 7; ++i) {
    std::getline(lines, line);
    std::istringstream row(line);
    int id = 0;
    row >> id;
    EXPECT_EQ(id, static_cast<int>(i + 1));
    for (std::size_t j = 0; j < 7; ++j) {
      double v = -1;
      row >> v;
      EXPECT_NEAR(v, s(i, j), 0.005);
    }
  }
  EXPECT_NE(r.out.find("edges (7,"), std::string::npos);

  const auto table = r.out.substr(r.out.find(" node degree"));
  std::istringstream degrees(table);
  std::getline(degrees, line);
  int best_node = 0, best_degree = -1;
  int node = 0, degree = 0;
  while (degrees >> node >> degree) {
    if (degree > best_degree) {
      best_degree = degree;
      best_node = node;
    }
  }
  EXPECT_EQ(best_node, 2);
  EXPECT_EQ(best_degree, 4);
}

TEST(Cli, ServeRejectsBadBind) {
  EXPECT_EQ(run_cli({"serve", "--bind", "localhost"}).code, 2);
  EXPECT_EQ(run_cli({"serve", "--bind", "localhost:http"}).code, 2);
}

}  // namespace
}  // namespace mogram
