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

#include "mogram/pathfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "mogram/error.hpp"

namespace mogram {

void validate(const PathfinderParams& params) {
  if (std::isnan(params.r) || params.r < 1.0) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("pathfinder r must be >= 1, got {}", params.r), "r");
  }
  if (params.q && *params.q < 2) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("pathfinder q must be >= 2, got {}", *params.q),
                "q");
  }
}

int effective_q(const PathfinderParams& params, std::size_t n) {
  const int longest = n > 0 ? static_cast<int>(n) - 1 : 0;
  return params.q ? std::min(*params.q, longest) : longest;
}

std::string format_r(double r) {
  return std::isinf(r) ? std::string("inf") : fmt::format("{}", r);
}

double parse_r(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double r = 0.0;
  try {
    r = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("pf-r must be a number or \"inf\", got '{}'", text),
                "r");
  }
  return r;
}

std::optional<int> parse_q(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  int q = 0;
  try {
    q = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("pf-q must be an integer or \"auto\", got '{}'", text),
                "q");
  }
  return q;
}

DistanceMatrix to_distance(const SimilarityMatrix& similarity) {
  const std::size_t n = similarity.size();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d(i, j) = i == j ? 0.0 : 1.0 - similarity(i, j);
  }
  return d;
}

void check_distance_matrix(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d(i, j);
      const auto where = fmt::format("row {}, column {}", i + 1, j + 1);
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidDistance, "non-finite distance at " + where, where);
      if (v < 0.0) throw Error(ErrorCode::NegativeDistance, "negative distance at " + where, where);
      if (i == j && v != 0.0) throw Error(ErrorCode::InvalidDistance, "non-zero diagonal at " + where, where);
      if (v != d(j, i)) throw Error(ErrorCode::NonSymmetricInput, "asymmetric distance at " + where, where);
    }
  }
}

namespace {

std::vector<int> default_labels(std::vector<int> labels, std::size_t n) {
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 1);
  }
  if (labels.size() != n) {
    throw Error(ErrorCode::InvalidParameter,
                fmt::format("{} labels supplied for {} nodes", labels.size(), n));
  }
  return labels;
}

void check_inputs(const DistanceMatrix& d, const PathfinderParams& params) {
  validate(params);
  check_distance_matrix(d);
  if (d.size() < 2) {
    throw Error(ErrorCode::TooFewSolutions, fmt::format("pathfinder needs >= 2 nodes, got {}", d.size()));
  }
}

// Union-find over node indices for the spanning-forest route.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// With r = inf and unbounded path length an edge survives iff its endpoints
// are not already joined by strictly lighter edges, i.e. iff it belongs to
// some minimum spanning tree.
std::vector<Edge> prune_minimax(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<Edge> candidates;
  candidates.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) candidates.push_back({i, j, d(i, j)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Edge& l, const Edge& r) { return l.similarity < r.similarity; });

  DisjointSets forest(n);
  std::vector<Edge> kept;
  for (std::size_t begin = 0; begin < candidates.size();) {
    std::size_t end = begin;
    while (end < candidates.size() && candidates[end].similarity == candidates[begin].similarity) ++end;
    for (std::size_t k = begin; k < end; ++k) {
      const auto& e = candidates[k];
      if (forest.find(e.a) != forest.find(e.b)) kept.push_back({e.a, e.b, 1.0 - e.similarity});
    }
    for (std::size_t k = begin; k < end; ++k) forest.unite(candidates[k].a, candidates[k].b);
    begin = end;
  }
  return kept;
}

// Walk costs are kept in "powered" form (sum of d^r, or max for r = inf)
// and accumulated from the row node outward.
std::vector<Edge> prune_by_path_length(const DistanceMatrix& d, double r, int q) {
  const std::size_t n = d.size();
  const bool minimax = std::isinf(r);
  SquareMatrix weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) weight(i, j) = minimax ? d(i, j) : std::pow(d(i, j), r);
  }

  SquareMatrix best = weight;  // cheapest walk of at most k edges
  SquareMatrix next(n);
  for (int k = 2; k <= q; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double cost = best(i, j);
        for (std::size_t m = 0; m < n; ++m) {
          if (m == i || m == j) continue;
          const double via = minimax ? std::max(best(i, m), weight(m, j)) : best(i, m) + weight(m, j);
          cost = std::min(cost, via);
        }
        next(i, j) = cost;
      }
    }
    std::swap(best, next);
  }

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(best(i, j) < weight(i, j))) kept.push_back({i, j, 1.0 - d(i, j)});
    }
  }
  return kept;
}

}  // namespace

MoGram pathfinder_prune_dp(const DistanceMatrix& d, const PathfinderParams& params, std::vector<int> labels) {
  check_inputs(d, params);
  auto names = default_labels(std::move(labels), d.size());
  return MoGram(std::move(names), prune_by_path_length(d, params.r, effective_q(params, d.size())));
}

MoGram pathfinder_prune(const DistanceMatrix& d, const PathfinderParams& params, std::vector<int> labels) {
  check_inputs(d, params);
  auto names = default_labels(std::move(labels), d.size());
  const int q = effective_q(params, d.size());
  if (std::isinf(params.r) && q == static_cast<int>(d.size()) - 1) {
    return MoGram(std::move(names), prune_minimax(d));
  }
  return MoGram(std::move(names), prune_by_path_length(d, params.r, q));
}

}  // namespace mogram
