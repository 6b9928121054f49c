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
#include <random>
#include <string>
#include <vector>

#include "mogram/model.hpp"

namespace mogram::testing {

using Rng = std::mt19937_64;

/// Symmetric, zero-diagonal distances. With `grid` > 0 entries are drawn
/// from {1/grid, ..., 1} so ties are common.
DistanceMatrix random_distances(std::size_t n, Rng& rng, int grid = 0);

std::vector<std::string> random_tokens(std::size_t max_len, const std::vector<std::string>& alphabet, Rng& rng);

/// Tasks 0..tasks-1 spread over 1..max_stations stations; some tasks may be
/// left unassigned.
std::vector<TaskSet> random_configuration(int tasks, int max_stations, Rng& rng);

std::vector<std::uint8_t> random_bits(std::size_t n, Rng& rng);

/// Random connected moGram: a random spanning tree plus extra edges.
MoGram random_connected_graph(std::size_t n, Rng& rng);

std::vector<Point> random_positions(std::size_t n, Rng& rng, double extent = 1.0);

/// Every token list of length <= max_len over `alphabet`.
std::vector<std::vector<std::string>> all_token_lists(std::size_t max_len, const std::vector<std::string>& alphabet);

}  // namespace mogram::testing
