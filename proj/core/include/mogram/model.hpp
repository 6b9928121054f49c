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

// Shared domain types consumed by every stage of the moGram pipeline.
// All values are immutable once built; they are safe to share across threads.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mogram {

enum class Sense { minimize, maximize };

std::string_view to_string(Sense sense) noexcept;

struct ObjectiveSpec {
  std::string name;
  Sense sense = Sense::minimize;

  friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

/// Tasks assigned to one workstation.
using TaskSet = std::set<int>;

/// A line configuration: station k holds the tasks in `stations[k]`.
struct Assignment {
  std::vector<TaskSet> stations;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Membership string over a pool of `pool_size` candidates; each entry is 0 or 1.
struct BinaryString {
  std::vector<std::uint8_t> bits;
  friend bool operator==(const BinaryString&, const BinaryString&) = default;
};

/// Ordered entities (terms and operators) compared as exact text.
struct TokenList {
  std::vector<std::string> tokens;
  friend bool operator==(const TokenList&, const TokenList&) = default;
};

/// No design data; similarities come from a precomputed matrix.
struct NoDesign {
  friend bool operator==(const NoDesign&, const NoDesign&) = default;
};

using DesignPayload = std::variant<NoDesign, Assignment, BinaryString, TokenList>;

enum class PayloadKind { none, assignment, binary, tokens };

PayloadKind kind_of(const DesignPayload& payload) noexcept;
std::string_view to_string(PayloadKind kind) noexcept;

struct FrontSolution {
  int id = 0;  // 1-based label
  std::vector<double> objectives;
  DesignPayload design;

  friend bool operator==(const FrontSolution&, const FrontSolution&) = default;
};

struct SolutionSet {
  std::vector<ObjectiveSpec> objectives;
  std::vector<FrontSolution> solutions;
  std::optional<int> pool_size;

  std::size_t size() const noexcept { return solutions.size(); }
  std::size_t objective_count() const noexcept { return objectives.size(); }
  /// Payload variant shared by all solutions (none for an empty set).
  PayloadKind payload_kind() const noexcept;
  std::vector<int> ids() const;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// Returns `raw` unchanged when every invariant holds; otherwise throws the
/// first violation found as a typed `Error` naming the offending solution.
SolutionSet validate_solution_set(SolutionSet raw);

/// Dense row-major n x n matrix of reals.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const std::vector<double>& data() const noexcept { return data_; }

  /// Rows `keep` x columns `keep`, in the given order.
  SquareMatrix submatrix(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Pairwise dissimilarities fed to network scaling.
using DistanceMatrix = SquareMatrix;

/// Symmetric, unit-diagonal matrix of similarities in [0,1].
class SimilarityMatrix {
 public:
  /// Validates and wraps `values`. Throws PrecomputedInvalid naming the
  /// failing row/column and invariant.
  static SimilarityMatrix from_values(SquareMatrix values);
  static SimilarityMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return values_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  const SquareMatrix& values() const noexcept { return values_; }
  std::vector<std::vector<double>> rows() const;

  SimilarityMatrix restricted_to(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const SimilarityMatrix&, const SimilarityMatrix&) = default;

 private:
  explicit SimilarityMatrix(SquareMatrix values) : values_(std::move(values)) {}
  SquareMatrix values_;
};

/// A retained edge between node indices a < b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double similarity = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The pruned network: nodes carry the solution ids as labels, edges the
/// similarity of their endpoints. Edges are kept sorted by (a, b).
class MoGram {
 public:
  /// Throws std::invalid_argument if the edge list is malformed or leaves a
  /// node isolated.
  MoGram(std::vector<int> labels, std::vector<Edge> edges);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(std::size_t i, std::size_t j) const;
  std::size_t degree(std::size_t i) const;
  /// Symmetric 0/1 adjacency with zero diagonal.
  std::vector<std::vector<int>> adjacency() const;
  /// Retained edges as pairs of labels, (smaller index first).
  std::vector<std::pair<int, int>> labeled_edges() const;

  friend bool operator==(const MoGram&, const MoGram&) = default;

 private:
  std::vector<int> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class LayoutStatus { converged, iteration_cap, stalled };

std::string_view to_string(LayoutStatus status) noexcept;

struct LayoutReport {
  int iterations = 0;
  double max_gradient = 0.0;
  double energy = 0.0;
  LayoutStatus status = LayoutStatus::converged;

  friend bool operator==(const LayoutReport&, const LayoutReport&) = default;
};

struct LayoutedMoGram {
  MoGram graph;
  std::vector<Point> positions;
  LayoutReport report;

  friend bool operator==(const LayoutedMoGram&, const LayoutedMoGram&) = default;
};

}  // namespace mogram
