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

#include "mogram/similarity.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "mogram/error.hpp"

namespace mogram {

double sim_station(const TaskSet& a, const TaskSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() + b.size());
}

double sim_line(std::span<const TaskSet> a, std::span<const TaskSet> b) {
  const std::size_t m = std::max(a.size(), b.size());
  if (m == 0) throw Error(ErrorCode::BothConfigsEmpty, "both line configurations have no stations");
  static const TaskSet empty;
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    total += sim_station(k < a.size() ? a[k] : empty, k < b.size() ? b[k] : empty);
  }
  return total / static_cast<double>(m);
}

double hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                        std::size_t pool_size) {
  if (pool_size == 0 || a.size() != pool_size || b.size() != pool_size) {
    throw Error(ErrorCode::LengthMismatch,
                fmt::format("binary strings of length {} and {} for pool size {}", a.size(), b.size(),
                            pool_size));
  }
  std::size_t differing = 0;
  for (std::size_t k = 0; k < pool_size; ++k) differing += (a[k] != b[k]) ? 1 : 0;
  return static_cast<double>(differing) / static_cast<double>(pool_size);
}

double sim_hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                   std::size_t pool_size) {
  return 1.0 - hamming_distance(a, b, pool_size);
}

std::size_t levenshtein(std::span<const std::string> a, std::span<const std::string> b) {
  // Two rolling rows of the (|a|+1) x (|b|+1) table; row i holds distances
  // from the first i tokens of a.
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t substitute = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, substitute});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double sim_levenshtein(std::span<const std::string> a, std::span<const std::string> b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

PayloadKind expected_payload(const MetricChoice& metric) noexcept {
  switch (metric.index()) {
    case 0: return PayloadKind::assignment;
    case 1: return PayloadKind::binary;
    case 2: return PayloadKind::tokens;
    default: return PayloadKind::none;
  }
}

std::string_view metric_name(const MetricChoice& metric) noexcept {
  switch (metric.index()) {
    case 0: return "tsalbp";
    case 1: return "hamming";
    case 2: return "levenshtein";
    default: return "precomputed";
  }
}

MetricChoice metric_from_name(std::string_view name) {
  if (name == "tsalbp") return TsalbpLineMetric{};
  if (name == "hamming") return HammingMetric{};
  if (name == "levenshtein") return LevenshteinMetric{};
  if (name == "precomputed") {
    throw Error(ErrorCode::InvalidParameter, "metric 'precomputed' requires a similarity matrix");
  }
  throw Error(ErrorCode::InvalidParameter, fmt::format("unknown metric '{}'", name), std::string(name));
}

MetricChoice default_metric_for(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::assignment: return TsalbpLineMetric{};
    case PayloadKind::binary: return HammingMetric{};
    case PayloadKind::tokens: return LevenshteinMetric{};
    case PayloadKind::none: break;
  }
  throw Error(ErrorCode::MetricPayloadMismatch,
              "solutions carry no design payload; a precomputed similarity matrix is required");
}

namespace {

double pair_similarity(const FrontSolution& x, const FrontSolution& y, const MetricChoice& metric,
                       std::size_t pool_size) {
  switch (metric.index()) {
    case 0:
      return sim_line(std::get<Assignment>(x.design).stations, std::get<Assignment>(y.design).stations);
    case 1:
      return sim_hamming(std::get<BinaryString>(x.design).bits, std::get<BinaryString>(y.design).bits,
                         pool_size);
    case 2:
      return sim_levenshtein(std::get<TokenList>(x.design).tokens, std::get<TokenList>(y.design).tokens);
    default:
      return 0.0;
  }
}

}  // namespace

SimilarityMatrix build_similarity_matrix(const SolutionSet& set, const MetricChoice& metric) {
  const std::size_t n = set.size();
  const PayloadKind want = expected_payload(metric);
  if (set.payload_kind() != want) {
    throw Error(ErrorCode::MetricPayloadMismatch,
                fmt::format("metric '{}' needs '{}' payloads but the solutions carry '{}'",
                            metric_name(metric), to_string(want), to_string(set.payload_kind())));
  }
  if (const auto* pre = std::get_if<PrecomputedMetric>(&metric)) {
    if (pre->matrix.size() != n) {
      throw Error(ErrorCode::PrecomputedInvalid,
                  fmt::format("precomputed matrix is {}x{} but the set has {} solutions", pre->matrix.size(),
                              pre->matrix.size(), n),
                  "n");
    }
    return pre->matrix;
  }
  const std::size_t pool = set.pool_size ? static_cast<std::size_t>(*set.pool_size) : 0;
  SquareMatrix values(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    values(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = pair_similarity(set.solutions[i], set.solutions[j], metric, pool);
      values(i, j) = s;
      values(j, i) = s;
    }
  }
  return SimilarityMatrix::from_values(std::move(values));
}

}  // namespace mogram
