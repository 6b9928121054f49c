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

#include "mogram/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "mogram/error.hpp"

namespace mogram {

void validate(const LayoutParams& p) {
  auto bad = [](const char* field, double value) {
    throw Error(ErrorCode::InvalidParameter, fmt::format("layout {} must be positive, got {}", field, value),
                field);
  };
  if (!(p.desired_diameter > 0.0) || !std::isfinite(p.desired_diameter)) bad("desired_diameter", p.desired_diameter);
  if (!(p.spring_constant > 0.0) || !std::isfinite(p.spring_constant)) bad("spring_constant", p.spring_constant);
  if (!(p.tolerance > 0.0) || !(p.tolerance < 1.0)) {
    throw Error(ErrorCode::InvalidParameter,
                fmt::format("layout tolerance must lie in (0, 1), got {}", p.tolerance), "tolerance");
  }
  if (p.max_outer_iterations && *p.max_outer_iterations <= 0) bad("max_outer_iterations", *p.max_outer_iterations);
  if (p.max_newton_steps <= 0) bad("max_newton_steps", p.max_newton_steps);
}

int outer_iteration_cap(const LayoutParams& params, std::size_t n) {
  return params.max_outer_iterations.value_or(100 * static_cast<int>(n));
}

SquareMatrix graph_distances(const MoGram& graph, DistanceMode mode) {
  const std::size_t n = graph.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  SquareMatrix d(n, inf);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = 0.0;
  for (const auto& e : graph.edges()) {
    const double len = mode == DistanceMode::hops ? 1.0 : std::max(1.0 - e.similarity, kMinEdgeLength);
    d(e.a, e.b) = len;
    d(e.b, e.a) = len;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k) == inf) continue;
      for (std::size_t j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    }
  }

  std::vector<int> component(n, -1);
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (component[i] >= 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (d(i, j) < inf) component[j] = count;
    }
    ++count;
  }
  if (count > 1) {
    std::string parts;
    for (int c = 0; c < count; ++c) {
      std::vector<int> members;
      for (std::size_t i = 0; i < n; ++i) {
        if (component[i] == c) members.push_back(graph.labels()[i]);
      }
      parts += fmt::format("{}{{{}}}", c ? " " : "", fmt::join(members, ","));
    }
    throw Error(ErrorCode::Disconnected, fmt::format("graph has {} components: {}", count, parts), parts);
  }
  return d;
}

StressModel::StressModel(const SquareMatrix& distances, double desired_diameter, double spring_constant)
    : ideal_(distances.size()), strength_(distances.size()) {
  const std::size_t n = distances.size();
  double longest = 0.0;
  for (double v : distances.data()) longest = std::max(longest, v);
  const double scale = longest > 0.0 ? desired_diameter / longest : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double dij = distances(i, j);
      ideal_(i, j) = scale * dij;
      strength_(i, j) = spring_constant / (dij * dij);
    }
  }
}

double StressModel::energy(std::span<const Point> p) const {
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      const double dist = std::hypot(p[i].x - p[j].x, p[i].y - p[j].y);
      const double stretch = dist - ideal_(i, j);
      total += 0.5 * strength_(i, j) * stretch * stretch;
    }
  }
  return total;
}

Point StressModel::gradient(std::size_t m, std::span<const Point> p) const {
  Point g;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == m) continue;
    const double dx = p[m].x - p[i].x;
    const double dy = p[m].y - p[i].y;
    const double dist = std::hypot(dx, dy);
    // The pull term has no direction for coincident points.
    const double pull = dist > 0.0 ? ideal_(m, i) / dist : 0.0;
    g.x += strength_(m, i) * (dx - pull * dx);
    g.y += strength_(m, i) * (dy - pull * dy);
  }
  return g;
}

std::array<double, 3> StressModel::hessian(std::size_t m, std::span<const Point> p) const {
  std::array<double, 3> h{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == m) continue;
    const double dx = p[m].x - p[i].x;
    const double dy = p[m].y - p[i].y;
    const double dist = std::hypot(dx, dy);
    if (dist == 0.0) continue;
    const double k = strength_(m, i);
    const double l_over_cube = ideal_(m, i) / (dist * dist * dist);
    h[0] += k * (1.0 - l_over_cube * dy * dy);
    h[1] += k * l_over_cube * dx * dy;
    h[2] += k * (1.0 - l_over_cube * dx * dx);
  }
  return h;
}

namespace {

// Uniform double in [-1, 1) from the raw 64-bit engine output, so the
// sequence is identical on every standard library.
double signed_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

double norm(Point v) { return std::hypot(v.x, v.y); }

class Relaxer {
 public:
  Relaxer(const StressModel& model, const LayoutParams& params, std::vector<Point> positions,
          std::vector<StepRecord>* trace)
      : model_(model),
        params_(params),
        positions_(std::move(positions)),
        trace_(trace),
        rng_(params.seed ^ 0x9e3779b97f4a7c15ULL),
        energy_(model.energy(positions_)) {}

  const std::vector<Point>& positions() const { return positions_; }
  double energy() const { return energy_; }

  // Moves node m until its gradient norm drops below tolerance, the step
  // budget runs out, or no descent step can be found. Returns whether the
  // node moved at all.
  bool relax(std::size_t m) {
    separate_coincident(m);
    bool moved = false;
    for (int step = 0; step < params_.max_newton_steps; ++step) {
      const Point g = model_.gradient(m, positions_);
      const double delta = norm(g);
      if (delta < params_.tolerance) break;

      const Point descent = descent_step(g, delta);
      bool accepted = try_step(m, newton_step(m, g));
      if (!accepted) accepted = try_step(m, descent);
      if (!accepted) break;
      moved = true;
    }
    return moved;
  }

 private:
  Point descent_step(Point g, double delta) const {
    const double len = std::min(delta, 0.1 * params_.desired_diameter);
    return {-g.x / delta * len, -g.y / delta * len};
  }

  // Newton direction for node m, or the gradient step when the Hessian is
  // degenerate or the Newton direction does not descend.
  Point newton_step(std::size_t m, Point g) const {
    const auto [hxx, hxy, hyy] = model_.hessian(m, positions_);
    const double det = hxx * hyy - hxy * hxy;
    if (std::abs(det) < 1e-12) return descent_step(g, norm(g));
    const Point step{-(hyy * g.x - hxy * g.y) / det, -(hxx * g.y - hxy * g.x) / det};
    if (step.x * g.x + step.y * g.y >= 0.0) return descent_step(g, norm(g));
    return step;
  }

  // Halves the step until the energy strictly decreases or the step falls
  // below the floor.
  bool try_step(std::size_t m, Point step) {
    const double floor = 1e-12 * params_.desired_diameter;
    const Point origin = positions_[m];
    double scale = 1.0;
    while (norm(step) * scale >= floor) {
      positions_[m] = {origin.x + scale * step.x, origin.y + scale * step.y};
      const double trial = model_.energy(positions_);
      if (trial < energy_) {
        if (trace_) trace_->push_back({m, energy_, trial});
        energy_ = trial;
        return true;
      }
      scale *= 0.5;
    }
    positions_[m] = origin;
    return false;
  }

  void separate_coincident(std::size_t m) {
    const double eps = 1e-12 * params_.desired_diameter;
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (i == m) continue;
      while (std::hypot(positions_[m].x - positions_[i].x, positions_[m].y - positions_[i].y) < eps) {
        positions_[m].x += 1e-3 * params_.desired_diameter * signed_unit(rng_);
        positions_[m].y += 1e-3 * params_.desired_diameter * signed_unit(rng_);
      }
    }
    energy_ = model_.energy(positions_);
  }

  const StressModel& model_;
  const LayoutParams& params_;
  std::vector<Point> positions_;
  std::vector<StepRecord>* trace_;
  std::mt19937_64 rng_;
  double energy_;
};

}  // namespace

std::vector<Point> initial_placement(std::size_t n, const LayoutParams& params) {
  std::mt19937_64 rng(params.seed);
  const double radius = 0.5 * params.desired_diameter;
  const double jitter = 1e-3 * params.desired_diameter;
  std::vector<Point> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    out[i].x = radius * std::sin(angle) + jitter * signed_unit(rng);
    out[i].y = -radius * std::cos(angle) + jitter * signed_unit(rng);
  }
  return out;
}

LayoutedMoGram kamada_kawai(const MoGram& graph, const LayoutParams& params, std::vector<StepRecord>* trace) {
  validate(params);
  const std::size_t n = graph.size();
  if (n < 2) throw Error(ErrorCode::TooFewSolutions, "layout needs at least 2 nodes");

  const StressModel model(graph_distances(graph, params.distance_mode), params.desired_diameter,
                          params.spring_constant);
  Relaxer relaxer(model, params, initial_placement(n, params), trace);

  const int cap = outer_iteration_cap(params, n);
  std::vector<bool> skipped(n, false);
  LayoutReport report;
  report.status = LayoutStatus::iteration_cap;
  for (;;) {
    // Largest gradient overall, and among nodes not skipped this round;
    // ties go to the lowest index.
    double overall = 0.0;
    double pick_norm = -1.0;
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      const double delta = norm(model.gradient(i, relaxer.positions()));
      overall = std::max(overall, delta);
      if (!skipped[i] && delta > pick_norm) {
        pick_norm = delta;
        pick = i;
      }
    }
    report.max_gradient = overall;
    if (overall < params.tolerance) {
      report.status = LayoutStatus::converged;
      break;
    }
    if (report.iterations >= cap) break;
    if (pick == n || pick_norm < params.tolerance) {
      report.status = LayoutStatus::stalled;
      break;
    }
    ++report.iterations;
    if (relaxer.relax(pick)) {
      std::fill(skipped.begin(), skipped.end(), false);
    } else {
      skipped[pick] = true;
    }
  }
  report.energy = relaxer.energy();
  return LayoutedMoGram{graph, relaxer.positions(), report};
}

std::vector<Point> normalize_positions(std::span<const Point> positions, double extent) {
  std::vector<Point> out(positions.begin(), positions.end());
  if (out.empty()) return out;
  Point centroid;
  double min_x = out[0].x, max_x = out[0].x, min_y = out[0].y, max_y = out[0].y;
  for (const auto& p : out) {
    centroid.x += p.x;
    centroid.y += p.y;
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  centroid.x /= static_cast<double>(out.size());
  centroid.y /= static_cast<double>(out.size());
  const double longer = std::max(max_x - min_x, max_y - min_y);
  const double scale = longer > 0.0 ? extent / longer : 1.0;
  for (auto& p : out) p = {(p.x - centroid.x) * scale, (p.y - centroid.y) * scale};
  return out;
}

}  // namespace mogram
