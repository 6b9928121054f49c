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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mogram/session.hpp"

namespace mogram::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

enum class Command { render, inspect, serve };

struct CliConfig {
  Command command = Command::render;
  std::string input;
  std::optional<std::string> metric;
  std::optional<std::string> matrix;
  std::vector<std::string> outputs;
  std::optional<std::string> format;  // overrides the output extension
  std::string pf_r = "inf";
  std::string pf_q = "auto";
  std::uint64_t seed = 1;
  double tolerance = 1e-4;
  std::optional<int> max_iterations;
  std::optional<double> s_lo;
  std::optional<double> s_hi;
  bool no_objective_colors = false;
  int label_decimals = 2;
  std::string bind = "127.0.0.1:8080";
  std::optional<std::string> ui_dir;
};

// Layout, pruning and style parameters from the flags. Throws mogram::Error
// on values that are wrong regardless of the input data.
PipelineParams pipeline_params(const CliConfig& cfg);

// Loads the input (and matrix) named by cfg.
CreateRequest build_request(const CliConfig& cfg);

// "svg", "dot" or "json" for an output path.
std::string output_format(const CliConfig& cfg, const std::string& path);

int run_render(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_inspect(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_serve(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Full entry point: parses argv, dispatches, and maps failures to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mogram::cli
