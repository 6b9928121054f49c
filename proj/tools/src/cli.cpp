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

#include "mogram/tools/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mogram/error.hpp"
#include "mogram/io.hpp"
#include "mogram/service.hpp"

namespace mogram::cli {

namespace {

// Flag values that fail validation are usage errors, not data errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, fmt::format("cannot open '{}' for writing", path), path);
  out << text;
  if (!out) throw Error(ErrorCode::ParseError, fmt::format("failed writing '{}'", path), path);
}

void add_input_options(CLI::App& cmd, CliConfig& cfg) {
  cmd.add_option("--input", cfg.input, "Solution-set JSON file")->required();
  cmd.add_option("--metric", cfg.metric, "Similarity metric")
      ->check(CLI::IsMember({"tsalbp", "hamming", "levenshtein", "precomputed"}));
  cmd.add_option("--matrix", cfg.matrix, "Precomputed similarity matrix JSON file");
  cmd.add_option("--pf-r", cfg.pf_r, "Pathfinder Minkowski parameter r (number >= 1 or inf)");
  cmd.add_option("--pf-q", cfg.pf_q, "Pathfinder path-length bound q (integer >= 2 or auto)");
}

void add_render_options(CLI::App& cmd, CliConfig& cfg) {
  cmd.add_option("--out", cfg.outputs, "Output file; repeat for several")->required();
  cmd.add_option("--format", cfg.format, "Output format, otherwise taken from the extension")
      ->check(CLI::IsMember({"svg", "dot", "json"}));
  cmd.add_option("--seed", cfg.seed, "Layout seed");
  cmd.add_option("--tol", cfg.tolerance, "Layout gradient tolerance");
  cmd.add_option("--max-iterations", cfg.max_iterations, "Layout outer iteration cap");
  cmd.add_option("--s-lo", cfg.s_lo, "Similarity mapped to the thinnest edge");
  cmd.add_option("--s-hi", cfg.s_hi, "Similarity mapped to the thickest edge");
  cmd.add_flag("--no-objective-colors", cfg.no_objective_colors, "Draw every node in one neutral color");
  cmd.add_option("--label-decimals", cfg.label_decimals, "Decimals in edge labels");
}

void print_summary(const SessionState& state, std::ostream& out) {
  const auto& graph = state.layout.graph;
  const auto& report = state.layout.report;
  fmt::print(out, "solutions: {}\n", graph.size());
  fmt::print(out, "metric: {}\n", metric_name(state.metric));
  fmt::print(out, "edges: {}\n", graph.edge_count());
  fmt::print(out, "layout: {} after {} iterations (max gradient {:.3g})\n", to_string(report.status),
             report.iterations, report.max_gradient);
}

std::pair<std::string, int> split_bind(const std::string& bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos || colon == 0) throw UsageError("--bind expects HOST:PORT");
  try {
    std::size_t used = 0;
    const int port = std::stoi(bind.substr(colon + 1), &used);
    if (used != bind.size() - colon - 1 || port < 0 || port > 65535) throw UsageError("bad port");
    return {bind.substr(0, colon), port};
  } catch (const std::exception&) {
    throw UsageError(fmt::format("--bind expects HOST:PORT, got '{}'", bind));
  }
}

}  // namespace

PipelineParams pipeline_params(const CliConfig& cfg) {
  PipelineParams p;
  p.pathfinder.r = parse_r(cfg.pf_r);
  p.pathfinder.q = parse_q(cfg.pf_q);
  validate(p.pathfinder);
  p.layout.seed = cfg.seed;
  p.layout.tolerance = cfg.tolerance;
  p.layout.max_outer_iterations = cfg.max_iterations;
  validate(p.layout);
  p.style.s_lo = cfg.s_lo;
  p.style.s_hi = cfg.s_hi;
  p.style.objective_coloring = !cfg.no_objective_colors;
  p.style.label_decimals = cfg.label_decimals;
  validate(p.style, 0);
  return p;
}

CreateRequest build_request(const CliConfig& cfg) {
  CreateRequest req;
  req.params = pipeline_params(cfg);
  req.set = load_solution_set(cfg.input);
  const bool precomputed = cfg.metric == "precomputed" || (!cfg.metric && cfg.matrix);
  if (precomputed) {
    if (!cfg.matrix) throw UsageError("--metric precomputed requires --matrix");
    req.metric = PrecomputedMetric{load_similarity_matrix(*cfg.matrix)};
  } else if (cfg.matrix) {
    throw UsageError("--matrix is only used with --metric precomputed");
  } else if (cfg.metric) {
    req.metric = metric_from_name(*cfg.metric);
  } else {
    req.metric = default_metric_for(req.set.payload_kind());
  }
  return req;
}

std::string output_format(const CliConfig& cfg, const std::string& path) {
  if (cfg.format) return *cfg.format;
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".svg") return "svg";
  if (ext == ".dot" || ext == ".gv") return "dot";
  if (ext == ".json") return "json";
  throw UsageError(fmt::format("cannot tell the format of '{}'; use --format", path));
}

int run_render(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<std::string> formats;
  for (const auto& path : cfg.outputs) formats.push_back(output_format(cfg, path));
  const auto state = create_session(build_request(cfg));
  for (std::size_t k = 0; k < cfg.outputs.size(); ++k) {
    const auto& f = formats[k];
    write_file(cfg.outputs[k], f == "svg" ? view_svg(state) : f == "dot" ? view_dot(state) : view_json(state).dump(2));
  }
  print_summary(state, out);
  for (std::size_t k = 0; k < cfg.outputs.size(); ++k) fmt::print(out, "wrote {} ({})\n", cfg.outputs[k], formats[k]);
  return kExitOk;
}

int run_inspect(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto req = build_request(cfg);
  const auto s = build_similarity_matrix(req.set, req.metric);
  const auto labels = req.set.ids();
  const auto graph = pathfinder_prune(to_distance(s), req.params.pathfinder, labels);
  const std::size_t n = labels.size();

  fmt::print(out, "similarity ({}, n = {})\n", metric_name(req.metric), n);
  fmt::print(out, "{:>5}", "");
  for (int id : labels) fmt::print(out, " {:>5}", id);
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    fmt::print(out, "{:>5}", labels[i]);
    for (std::size_t j = 0; j < n; ++j) fmt::print(out, " {:>5.2f}", s(i, j));
    out << '\n';
  }

  fmt::print(out, "\nedges ({}, r = {}, q = {})\n", graph.edge_count(), format_r(req.params.pathfinder.r),
             effective_q(req.params.pathfinder, n));
  for (const auto& e : graph.edges()) {
    fmt::print(out, "{:>5} -- {:<5} {:.2f}\n", labels[e.a], labels[e.b], e.similarity);
  }

  fmt::print(out, "\n{:>5} {:>6}\n", "node", "degree");
  for (std::size_t i = 0; i < n; ++i) fmt::print(out, "{:>5} {:>6}\n", labels[i], graph.degree(i));
  return kExitOk;
}

int run_serve(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  const auto [host, port] = split_bind(cfg.bind);
  SessionService service;
  std::optional<std::filesystem::path> ui;
  if (cfg.ui_dir) ui = *cfg.ui_dir;
  HttpServer server(service, ui);
  const int bound = server.bind(host, port);
  if (bound < 0) throw Error(ErrorCode::InvalidParameter, fmt::format("cannot bind {}", cfg.bind), cfg.bind);
  fmt::print(out, "listening on http://{}:{}\n", host, bound);
  out.flush();
  return server.listen() ? kExitOk : kExitDataError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Build, lay out and render moGrams of Pareto-front solution sets", "mogram"};
  app.require_subcommand(1);

  auto* render = app.add_subcommand("render", "Run the full pipeline and write SVG, DOT or view JSON");
  add_input_options(*render, cfg);
  add_render_options(*render, cfg);

  auto* inspect = app.add_subcommand("inspect", "Print the similarity matrix, retained edges and degrees");
  add_input_options(*inspect, cfg);

  auto* serve = app.add_subcommand("serve", "Run the HTTP session service");
  serve->add_option("--bind", cfg.bind, "HOST:PORT to listen on")->capture_default_str();
  serve->add_option("--ui-dir", cfg.ui_dir, "Static files served under /ui");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  cfg.command = render->parsed() ? Command::render : inspect->parsed() ? Command::inspect : Command::serve;
  try {
    if (cfg.command != Command::serve) pipeline_params(cfg);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }

  try {
    switch (cfg.command) {
      case Command::render: return run_render(cfg, out, err);
      case Command::inspect: return run_inspect(cfg, out, err);
      case Command::serve: return run_serve(cfg, out, err);
    }
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    if (e.phase()) {
      fmt::print(err, "error [{}] {}: {}\n", to_string(*e.phase()), to_string(e.code()), e.what());
    } else {
      fmt::print(err, "error {}: {}\n", to_string(e.code()), e.what());
    }
    return kExitDataError;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitDataError;
  }
  return kExitDataError;
}

}  // namespace mogram::cli
