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

#include "mogram/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "mogram/error.hpp"

namespace mogram {

std::string_view to_string(Sense sense) noexcept {
  return sense == Sense::minimize ? "min" : "max";
}

PayloadKind kind_of(const DesignPayload& payload) noexcept {
  return static_cast<PayloadKind>(payload.index());
}

std::string_view to_string(PayloadKind kind) noexcept {
  switch (kind) {
    case PayloadKind::none: return "none";
    case PayloadKind::assignment: return "assignment";
    case PayloadKind::binary: return "binary";
    case PayloadKind::tokens: return "tokens";
  }
  return "none";
}

std::string_view to_string(LayoutStatus status) noexcept {
  switch (status) {
    case LayoutStatus::converged: return "converged";
    case LayoutStatus::iteration_cap: return "iteration_cap";
    case LayoutStatus::stalled: return "stalled";
  }
  return "unknown";
}

PayloadKind SolutionSet::payload_kind() const noexcept {
  return solutions.empty() ? PayloadKind::none : kind_of(solutions.front().design);
}

std::vector<int> SolutionSet::ids() const {
  std::vector<int> out;
  out.reserve(solutions.size());
  for (const auto& s : solutions) out.push_back(s.id);
  return out;
}

namespace {

[[noreturn]] void fail_for(ErrorCode code, int id, const std::string& what) {
  throw Error(code, fmt::format("solution {}: {}", id, what), fmt::format("solution {}", id));
}

void check_payload(const FrontSolution& s, PayloadKind expected, const std::optional<int>& pool) {
  const PayloadKind kind = kind_of(s.design);
  if (kind != expected) {
    fail_for(ErrorCode::PayloadMismatch, s.id,
             fmt::format("payload kind '{}' differs from the set's '{}'", to_string(kind),
                         to_string(expected)));
  }
  if (const auto* a = std::get_if<Assignment>(&s.design)) {
    std::unordered_set<int> seen;
    for (const auto& station : a->stations) {
      for (int task : station) {
        if (task < 0) fail_for(ErrorCode::PayloadMismatch, s.id, fmt::format("negative task id {}", task));
        if (!seen.insert(task).second) {
          fail_for(ErrorCode::PayloadMismatch, s.id,
                   fmt::format("task {} assigned to more than one station", task));
        }
      }
    }
  } else if (const auto* b = std::get_if<BinaryString>(&s.design)) {
    if (!pool) fail_for(ErrorCode::PayloadMismatch, s.id, "binary payload requires pool_size");
    if (b->bits.size() != static_cast<std::size_t>(*pool)) {
      fail_for(ErrorCode::PayloadMismatch, s.id,
               fmt::format("binary payload length {} differs from pool_size {}", b->bits.size(), *pool));
    }
    for (auto bit : b->bits) {
      if (bit > 1) fail_for(ErrorCode::PayloadMismatch, s.id, "binary payload entries must be 0 or 1");
    }
  } else if (const auto* t = std::get_if<TokenList>(&s.design)) {
    for (const auto& tok : t->tokens) {
      if (tok.empty()) fail_for(ErrorCode::PayloadMismatch, s.id, "empty token");
    }
  }
}

}  // namespace

SolutionSet validate_solution_set(SolutionSet raw) {
  if (raw.objectives.empty()) {
    throw Error(ErrorCode::InvalidObjectives, "at least one objective is required");
  }
  std::unordered_set<std::string> names;
  for (const auto& obj : raw.objectives) {
    if (obj.name.empty()) throw Error(ErrorCode::InvalidObjectives, "objective name must be non-empty");
    if (!names.insert(obj.name).second) {
      throw Error(ErrorCode::InvalidObjectives, fmt::format("duplicate objective name '{}'", obj.name),
                  obj.name);
    }
  }
  const std::size_t n = raw.solutions.size();
  if (n < 2) {
    throw Error(ErrorCode::TooFewSolutions,
                fmt::format("a moGram needs at least 2 solutions, got {}", n));
  }
  if (raw.pool_size && *raw.pool_size < 1) {
    throw Error(ErrorCode::PayloadMismatch, fmt::format("pool_size must be >= 1, got {}", *raw.pool_size));
  }

  const PayloadKind expected = raw.payload_kind();
  std::unordered_set<int> ids;
  for (const auto& s : raw.solutions) {
    if (!ids.insert(s.id).second) fail_for(ErrorCode::DuplicateId, s.id, "duplicate id");
    if (s.id < 1 || static_cast<std::size_t>(s.id) > n) {
      fail_for(ErrorCode::InvalidIds, s.id, fmt::format("ids must form 1..{}", n));
    }
    if (s.objectives.size() != raw.objectives.size()) {
      fail_for(ErrorCode::ObjectiveArityMismatch, s.id,
               fmt::format("{} objective values for {} objectives", s.objectives.size(),
                           raw.objectives.size()));
    }
    for (double v : s.objectives) {
      if (!std::isfinite(v)) fail_for(ErrorCode::NonFiniteValue, s.id, "non-finite objective value");
    }
    check_payload(s, expected, raw.pool_size);
  }
  return raw;
}

SquareMatrix SquareMatrix::submatrix(const std::vector<std::size_t>& keep) const {
  SquareMatrix out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
  }
  return out;
}

SimilarityMatrix SimilarityMatrix::from_values(SquareMatrix values) {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = values(i, j);
      const auto where = fmt::format("row {}, column {}", i + 1, j + 1);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw Error(ErrorCode::PrecomputedInvalid, fmt::format("entry outside [0,1] at {}", where), where);
      }
      if (i == j && v != 1.0) {
        throw Error(ErrorCode::PrecomputedInvalid, fmt::format("diagonal entry is not 1 at {}", where), where);
      }
      if (v != values(j, i)) {
        throw Error(ErrorCode::PrecomputedInvalid, fmt::format("matrix not symmetric at {}", where), where);
      }
    }
  }
  return SimilarityMatrix(std::move(values));
}

SimilarityMatrix SimilarityMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SquareMatrix values(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      const auto where = fmt::format("row {}", i + 1);
      throw Error(ErrorCode::PrecomputedInvalid,
                  fmt::format("{} has {} entries, expected {}", where, rows[i].size(), n), where);
    }
    for (std::size_t j = 0; j < n; ++j) values(i, j) = rows[i][j];
  }
  return from_values(std::move(values));
}

std::vector<std::vector<double>> SimilarityMatrix::rows() const {
  std::vector<std::vector<double>> out(size(), std::vector<double>(size()));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = values_(i, j);
  }
  return out;
}

SimilarityMatrix SimilarityMatrix::restricted_to(const std::vector<std::size_t>& keep) const {
  return SimilarityMatrix(values_.submatrix(keep));
}

MoGram::MoGram(std::vector<int> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)), adjacency_(labels_.size() * labels_.size(), 0) {
  const std::size_t n = labels_.size();
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& l, const Edge& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });
  for (const auto& e : edges_) {
    if (e.a >= e.b || e.b >= n) throw std::invalid_argument("MoGram: edge endpoints must satisfy a < b < n");
    if (!(e.similarity >= 0.0 && e.similarity <= 1.0)) {
      throw std::invalid_argument("MoGram: edge similarity outside [0,1]");
    }
    auto& cell = adjacency_[e.a * n + e.b];
    if (cell) throw std::invalid_argument("MoGram: duplicate edge");
    cell = 1;
    adjacency_[e.b * n + e.a] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (n > 1 && degree(i) == 0) {
      throw std::invalid_argument(fmt::format("MoGram: node {} is isolated", labels_[i]));
    }
  }
}

bool MoGram::adjacent(std::size_t i, std::size_t j) const {
  return adjacency_[i * size() + j] != 0;
}

std::size_t MoGram::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < size(); ++j) d += adjacency_[i * size() + j];
  return d;
}

std::vector<std::vector<int>> MoGram::adjacency() const {
  std::vector<std::vector<int>> out(size(), std::vector<int>(size(), 0));
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = adjacency_[i * size() + j];
  }
  return out;
}

std::vector<std::pair<int, int>> MoGram::labeled_edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(labels_[e.a], labels_[e.b]);
  return out;
}

}  // namespace mogram
