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

// JSON file formats: the canonical solution-set file and precomputed
// similarity matrices. Field names are normative; unknown fields are
// rejected with ParseError naming the JSON path.

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mogram/model.hpp"

namespace mogram {

/// Parses and validates a solution set.
SolutionSet parse_solution_set(const nlohmann::json& doc);
SolutionSet parse_solution_set_text(std::string_view text);
SolutionSet load_solution_set(const std::filesystem::path& path);

nlohmann::json to_json(const SolutionSet& set);

/// {"n": int, "values": [[num...]...]}
SimilarityMatrix parse_similarity_matrix(const nlohmann::json& doc);
SimilarityMatrix load_similarity_matrix(const std::filesystem::path& path);

nlohmann::json to_json(const SimilarityMatrix& matrix);

/// Reads a whole file; throws ParseError naming the path if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace mogram
