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

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "mogram/error.hpp"

namespace mogram::testing {

MoGram pathfinder_oracle(const DistanceMatrix& d, const PathfinderParams& params, std::vector<int> labels) {
  const std::size_t n = d.size();
  if (n > 9) throw Error(ErrorCode::TooLarge, "pathfinder_oracle enumerates paths; n must be <= 9");
  const int q = effective_q(params, n);
  const bool minimax = std::isinf(params.r);
  auto weight = [&](std::size_t i, std::size_t j) { return minimax ? d(i, j) : std::pow(d(i, j), params.r); };
  auto extend = [&](double cost, double w) { return minimax ? std::max(cost, w) : cost + w; };

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double direct = weight(i, j);
      bool beaten = false;
      std::vector<bool> on_path(n, false);
      on_path[i] = true;
      // Depth-first over simple paths i -> ... -> j with >= 2 edges.
      std::function<void(std::size_t, double, int)> walk = [&](std::size_t at, double cost, int used) {
        if (beaten || used == q) return;
        for (std::size_t next = 0; next < n; ++next) {
          if (on_path[next]) continue;
          const double c = extend(cost, weight(at, next));
          if (next == j) {
            if (used + 1 >= 2 && c < direct) beaten = true;
            continue;
          }
          on_path[next] = true;
          walk(next, c, used + 1);
          on_path[next] = false;
        }
      };
      for (std::size_t first = 0; first < n && !beaten; ++first) {
        if (first == i || first == j) continue;
        on_path[first] = true;
        walk(first, weight(i, first), 1);
        on_path[first] = false;
      }
      if (!beaten) kept.push_back({i, j, 1.0 - d(i, j)});
    }
  }
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 1);
  }
  return MoGram(std::move(labels), std::move(kept));
}

std::map<std::vector<std::string>, std::size_t> edit_distances_by_search(const std::vector<std::string>& from,
                                                                       const std::vector<std::string>& alphabet,
                                                                       std::size_t max_len) {
  using Tokens = std::vector<std::string>;
  std::map<Tokens, std::size_t> seen{{from, 0}};
  std::deque<Tokens> frontier{from};
  while (!frontier.empty()) {
    const Tokens cur = std::move(frontier.front());
    frontier.pop_front();
    const std::size_t dist = seen.at(cur);
    auto visit = [&](Tokens next) {
      if (seen.emplace(next, dist + 1).second) frontier.push_back(std::move(next));
    };
    for (std::size_t p = 0; p < cur.size(); ++p) {
      Tokens del = cur;
      del.erase(del.begin() + static_cast<std::ptrdiff_t>(p));
      visit(std::move(del));
      for (const auto& s : alphabet) {
        if (s == cur[p]) continue;
        Tokens sub = cur;
        sub[p] = s;
        visit(std::move(sub));
      }
    }
    if (cur.size() < max_len) {
      for (std::size_t p = 0; p <= cur.size(); ++p) {
        for (const auto& s : alphabet) {
          Tokens ins = cur;
          ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(p), s);
          visit(std::move(ins));
        }
      }
    }
  }
  return seen;
}

std::size_t levenshtein_by_search(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::set<std::string> symbols(a.begin(), a.end());
  symbols.insert(b.begin(), b.end());
  const std::size_t cap = std::max(a.size(), b.size()) + 1;
  const auto reach = edit_distances_by_search(a, {symbols.begin(), symbols.end()}, cap);
  return reach.at(b);
}

double sim_line_direct(const std::vector<TaskSet>& a, const std::vector<TaskSet>& b) {
  const std::size_t m = std::max(a.size(), b.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const TaskSet sa = k < a.size() ? a[k] : TaskSet{};
    const TaskSet sb = k < b.size() ? b[k] : TaskSet{};
    std::vector<int> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
    const double denom = static_cast<double>(sa.size() + sb.size());
    sum += denom == 0.0 ? 1.0 : 2.0 * static_cast<double>(common.size()) / denom;
  }
  return sum / static_cast<double>(m);
}

double sim_hamming_direct(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
  double diff = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) diff += std::abs(static_cast<int>(a[k]) - static_cast<int>(b[k]));
  return 1.0 - diff / static_cast<double>(a.size());
}

double shortest_path_by_enumeration(const MoGram& graph, std::size_t from, std::size_t to) {
  const std::size_t n = graph.size();
  SquareMatrix len(n, -1.0);
  for (const auto& e : graph.edges()) {
    const double l = std::max(1.0 - e.similarity, 1e-6);
    len(e.a, e.b) = l;
    len(e.b, e.a) = l;
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, double)> walk = [&](std::size_t at, double cost) {
    if (at == to) {
      best = std::min(best, cost);
      return;
    }
    for (std::size_t next = 0; next < n; ++next) {
      if (on_path[next] || len(at, next) < 0.0) continue;
      on_path[next] = true;
      walk(next, cost + len(at, next));
      on_path[next] = false;
    }
  };
  on_path[from] = true;
  walk(from, 0.0);
  return from == to ? 0.0 : best;
}

std::vector<std::pair<std::size_t, std::size_t>> prim_mst(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<bool> in_tree(n, false);
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, n);
  key[0] = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (u == n || key[v] < key[u])) u = v;
    }
    in_tree[u] = true;
    if (parent[u] != n) edges.emplace_back(std::min(u, parent[u]), std::max(u, parent[u]));
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && d(u, v) < key[v]) {
        key[v] = d(u, v);
        parent[v] = u;
      }
    }
  }
  return edges;
}

std::size_t component_count(const MoGram& graph) {
  const std::size_t n = graph.size();
  std::vector<int> comp(n, -1);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> todo{s};
    comp[s] = static_cast<int>(count);
    while (!todo.empty()) {
      const auto u = todo.front();
      todo.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (graph.adjacent(u, v) && comp[v] < 0) {
          comp[v] = static_cast<int>(count);
          todo.push_back(v);
        }
      }
    }
    ++count;
  }
  return count;
}

SimilarityMatrix s_toy() {
  return SimilarityMatrix::from_rows({
      {1, 0.8, 0.7, 0.1, 0.1, 0.1, 0.1},
      {0.8, 1, 0.7, 0.1, 0.6, 0.1, 0.5},
      {0.7, 0.7, 1, 0.1, 0.1, 0.1, 0.1},
      {0.1, 0.1, 0.1, 1, 0.65, 0.1, 0.1},
      {0.1, 0.6, 0.1, 0.65, 1, 0.7, 0.1},
      {0.1, 0.1, 0.1, 0.1, 0.7, 1, 0.1},
      {0.1, 0.5, 0.1, 0.1, 0.1, 0.1, 1},
  });
}

std::vector<std::pair<int, int>> toy_edges() {
  return {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {2, 7}, {4, 5}, {5, 6}};
}

std::string fixture(const std::string& name) { return std::string(MOGRAM_FIXTURE_DIR) + "/" + name; }

std::string golden(const std::string& name) { return std::string(MOGRAM_GOLDEN_DIR) + "/" + name; }

Point finite_difference_gradient(const StressModel& model, std::vector<Point> positions, std::size_t m,
                                 double step) {
  const Point origin = positions[m];
  auto energy_at = [&](double dx, double dy) {
    positions[m] = {origin.x + dx, origin.y + dy};
    return model.energy(positions);
  };
  const double gx = (energy_at(step, 0.0) - energy_at(-step, 0.0)) / (2.0 * step);
  const double gy = (energy_at(0.0, step) - energy_at(0.0, -step)) / (2.0 * step);
  return {gx, gy};
}

}  // namespace mogram::testing
