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

// Design-space similarity metrics and the pairwise similarity matrix.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "mogram/model.hpp"

namespace mogram {

/// Dice overlap of two stations: 2|a n b| / (|a| + |b|). Two empty stations
/// count as identical (1.0).
double sim_station(const TaskSet& a, const TaskSet& b);

/// Mean station overlap over m = max(|a|, |b|) stations; the shorter
/// configuration is padded with empty stations. Throws BothConfigsEmpty if
/// neither configuration has a station.
double sim_line(std::span<const TaskSet> a, std::span<const TaskSet> b);

/// Fraction of differing positions; both strings must have `pool_size` entries.
double hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                        std::size_t pool_size);
double sim_hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                   std::size_t pool_size);

/// Token-level edit distance (unit-cost insert, delete, substitute).
std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b);

/// 1 - levenshtein / max(|a|, |b|); two empty queries are identical (1.0).
double sim_levenshtein(std::span<const std::string> a, std::span<const std::string> b);

struct TsalbpLineMetric {};
struct HammingMetric {};
struct LevenshteinMetric {};
struct PrecomputedMetric {
  SimilarityMatrix matrix;
};

using MetricChoice = std::variant<TsalbpLineMetric, HammingMetric, LevenshteinMetric, PrecomputedMetric>;

/// Payload variant a metric consumes.
PayloadKind expected_payload(const MetricChoice& metric) noexcept;

/// CLI / service spelling: tsalbp, hamming, levenshtein, precomputed.
std::string_view metric_name(const MetricChoice& metric) noexcept;

/// Maps a metric name to its choice; "precomputed" is rejected here since it
/// needs a matrix. Throws InvalidParameter for unknown names.
MetricChoice metric_from_name(std::string_view name);

/// The metric that fits a solution set's payload when none is named.
MetricChoice default_metric_for(PayloadKind kind);

SimilarityMatrix build_similarity_matrix(const SolutionSet& set, const MetricChoice& metric);

}  // namespace mogram
