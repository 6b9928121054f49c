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

#include "mogram/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace mogram {

namespace {

// Fixed-precision coordinates; negative zero is printed as zero.
std::string num(double v) {
  if (std::abs(v) < 5e-4) v = 0.0;
  return fmt::format("{:.3f}", v);
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Point on the circle at `turn` (fraction of a full turn, clockwise from
// 12 o'clock) in SVG coordinates (y down).
Point on_circle(Point c, double r, double turn) {
  const double angle = 2.0 * std::numbers::pi * turn;
  return {c.x + r * std::sin(angle), c.y - r * std::cos(angle)};
}

std::string sector_path(Point c, double r, std::size_t k, std::size_t count) {
  if (count == 1) {
    return fmt::format("M {} {} A {} {} 0 1 1 {} {} A {} {} 0 1 1 {} {} Z", num(c.x), num(c.y - r), num(r),
                       num(r), num(c.x), num(c.y + r), num(r), num(r), num(c.x), num(c.y - r));
  }
  const double start = static_cast<double>(k) / static_cast<double>(count);
  const double end = static_cast<double>(k + 1) / static_cast<double>(count);
  const Point a = on_circle(c, r, start);
  const Point b = on_circle(c, r, end);
  const int large_arc = (end - start) > 0.5 ? 1 : 0;
  return fmt::format("M {} {} L {} {} A {} {} 0 {} 1 {} {} Z", num(c.x), num(c.y), num(a.x), num(a.y), num(r),
                     num(r), large_arc, num(b.x), num(b.y));
}

}  // namespace

std::string emit_svg(const StyledMoGram& styled, const StyleSpec& spec) {
  const auto& graph = styled.layout.graph;
  const auto& pos = styled.layout.positions;
  const double r = spec.node_radius;

  std::vector<Point> px;
  px.reserve(pos.size());
  for (const auto& p : pos) px.push_back({p.x * spec.pixels_per_unit, p.y * spec.pixels_per_unit});

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  if (!px.empty()) {
    min_x = max_x = px[0].x;
    min_y = max_y = px[0].y;
  }
  for (const auto& p : px) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  // 10% of the layout extent, plus room for the node discs.
  const double margin = 0.1 * std::max(max_x - min_x, max_y - min_y) + r + 2.0;
  const double vx = min_x - margin;
  const double vy = min_y - margin;
  const double vw = (max_x - min_x) + 2.0 * margin;
  const double vh = (max_y - min_y) + 2.0 * margin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"{} {} {} {}\">\n",
      num(vw), num(vh), num(vx), num(vy), num(vw), num(vh));
  out += fmt::format("  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#FFFFFF\"/>\n", num(vx), num(vy),
                     num(vw), num(vh));

  const double font = std::max(8.0, 0.7 * r);
  out += "  <g id=\"edges\">\n";
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const auto& e = graph.edges()[k];
    const auto& es = styled.edge_styles[k];
    const Point a = px[e.a];
    const Point b = px[e.b];
    out += fmt::format("    <g class=\"edge\" id=\"edge-{}-{}\">\n", graph.labels()[e.a], graph.labels()[e.b]);
    out += fmt::format(
        "      <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" stroke-width=\"{}\" "
        "stroke-linecap=\"round\"/>\n",
        num(a.x), num(a.y), num(b.x), num(b.y), num(es.thickness));
    out += fmt::format(
        "      <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\" "
        "fill=\"#222222\">{}</text>\n",
        num(0.5 * (a.x + b.x)), num(0.5 * (a.y + b.y) - 0.5 * es.thickness - 2.0), num(0.8 * font),
        xml_escape(es.label));
    out += "    </g>\n";
  }
  out += "  </g>\n";

  out += "  <g id=\"nodes\">\n";
  for (std::size_t i = 0; i < px.size(); ++i) {
    const Point c = px[i];
    const auto& sectors = styled.node_sectors[i];
    out += fmt::format("    <g class=\"node\" id=\"node-{}\">\n", graph.labels()[i]);
    out += fmt::format("      <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#FFFFFF\"/>\n", num(c.x), num(c.y), num(r));
    for (std::size_t k = 0; k < sectors.size(); ++k) {
      out += fmt::format("      <path d=\"{}\" fill=\"{}\" fill-opacity=\"{}\"/>\n",
                         sector_path(c, r, k, sectors.size()), sectors[k].color, num(sectors[k].alpha));
    }
    out += fmt::format(
        "      <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
        num(c.x), num(c.y), num(r));
    out += fmt::format(
        "      <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" text-anchor=\"middle\" "
        "dominant-baseline=\"central\" fill=\"#000000\">{}</text>\n",
        num(c.x), num(c.y), num(font), graph.labels()[i]);
    out += "    </g>\n";
  }
  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

namespace {

std::string rgba(const Sector& s) {
  const int alpha = static_cast<int>(std::lround(std::clamp(s.alpha, 0.0, 1.0) * 255.0));
  return fmt::format("{}{:02X}", s.color, alpha);
}

}  // namespace

std::string emit_dot(const StyledMoGram& styled, const StyleSpec& spec) {
  const auto& graph = styled.layout.graph;
  const auto& pos = styled.layout.positions;
  // Graphviz points are 1/72 inch; node width is in inches.
  const double width_in = 2.0 * spec.node_radius / 72.0;

  std::string out = "graph mogram {\n";
  out += "  layout=neato;\n";
  out += "  outputorder=edgesfirst;\n";
  out += fmt::format("  node [shape=circle, fixedsize=true, width={}, fontname=\"sans-serif\"];\n", num(width_in));
  out += "  edge [color=\"#555555\", fontname=\"sans-serif\"];\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& sectors = styled.node_sectors[i];
    std::string fill;
    for (std::size_t k = 0; k < sectors.size(); ++k) fill += (k ? ":" : "") + rgba(sectors[k]);
    const double x = pos[i].x * spec.pixels_per_unit;
    const double y = -pos[i].y * spec.pixels_per_unit;
    out += fmt::format("  {} [label=\"{}\", pos=\"{},{}!\", style=\"{}\", fillcolor=\"{}\"];\n", graph.labels()[i],
                       graph.labels()[i], num(x), num(y), sectors.size() > 1 ? "wedged" : "filled", fill);
  }
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const auto& e = graph.edges()[k];
    const auto& es = styled.edge_styles[k];
    out += fmt::format("  {} -- {} [penwidth={}, label=\"{}\"];\n", graph.labels()[e.a], graph.labels()[e.b],
                       num(es.thickness), es.label);
  }
  out += "}\n";
  return out;
}

}  // namespace mogram
