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

#include <string>

#include "mogram/style.hpp"

namespace mogram {

/// SVG 1.1 document. Elements are ordered by node / edge index so output is
/// byte-stable for fixed inputs. Edges come first (one <line> plus a
/// midpoint label each), then one group per node holding its sector paths
/// and id text. Sector 1 starts at 12 o'clock and proceeds clockwise.
std::string emit_svg(const StyledMoGram& styled, const StyleSpec& spec);

/// Undirected DOT graph with pinned positions (points, y up), wedged node
/// fills carrying sector colors and opacity, and edge penwidth / labels.
std::string emit_dot(const StyledMoGram& styled, const StyleSpec& spec = {});

}  // namespace mogram
