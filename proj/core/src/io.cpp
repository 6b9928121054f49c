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

#include "mogram/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>

#include "mogram/error.hpp"

namespace mogram {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, fmt::format("{}: {}", where, what), where);
}

void only_fields(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto name : allowed) known = known || item.key() == name;
    if (!known) parse_fail(where, fmt::format("unknown field '{}'", item.key()));
  }
}

const json& required(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, fmt::format("missing field '{}'", key));
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where, "expected an integer");
  const auto wide = v.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
    parse_fail(where, "integer out of range");
  }
  return static_cast<int>(wide);
}

double as_number(const json& v, const std::string& where) {
  if (!v.is_number()) parse_fail(where, "expected a number");
  return v.get<double>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array");
  return v;
}

ObjectiveSpec parse_objective(const json& v, const std::string& where) {
  only_fields(v, where, {"name", "sense"});
  const auto& name = required(v, where, "name");
  if (!name.is_string()) parse_fail(where + ".name", "expected a string");
  const auto& sense = required(v, where, "sense");
  if (sense != "min" && sense != "max") parse_fail(where + ".sense", "expected \"min\" or \"max\"");
  return {name.get<std::string>(), sense == "min" ? Sense::minimize : Sense::maximize};
}

DesignPayload parse_design(const json& v, const std::string& where, int id) {
  if (!v.is_object()) parse_fail(where, "expected an object");
  const auto& kind = required(v, where, "kind");
  if (kind == "none") {
    only_fields(v, where, {"kind"});
    return NoDesign{};
  }
  if (kind == "assignment") {
    only_fields(v, where, {"kind", "stations"});
    Assignment a;
    const auto& stations = as_array(required(v, where, "stations"), where + ".stations");
    for (std::size_t k = 0; k < stations.size(); ++k) {
      const auto at = fmt::format("{}.stations[{}]", where, k);
      TaskSet set;
      for (const auto& task : as_array(stations[k], at)) {
        if (!set.insert(as_int(task, at)).second) {
          throw Error(ErrorCode::PayloadMismatch,
                      fmt::format("solution {}: task listed twice in station {}", id, k + 1),
                      fmt::format("solution {}", id));
        }
      }
      a.stations.push_back(std::move(set));
    }
    return a;
  }
  if (kind == "binary") {
    only_fields(v, where, {"kind", "bits"});
    const auto& bits = required(v, where, "bits");
    if (!bits.is_string()) parse_fail(where + ".bits", "expected a string of 0/1 characters");
    BinaryString b;
    for (char c : bits.get<std::string>()) {
      if (c != '0' && c != '1') parse_fail(where + ".bits", "expected only '0' and '1'");
      b.bits.push_back(c == '1' ? 1 : 0);
    }
    return b;
  }
  if (kind == "tokens") {
    only_fields(v, where, {"kind", "tokens"});
    TokenList t;
    const auto& tokens = as_array(required(v, where, "tokens"), where + ".tokens");
    for (const auto& tok : tokens) {
      if (!tok.is_string()) parse_fail(where + ".tokens", "expected strings");
      t.tokens.push_back(tok.get<std::string>());
    }
    return t;
  }
  parse_fail(where + ".kind", "expected one of assignment, binary, tokens, none");
}

json design_to_json(const DesignPayload& design) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NoDesign>) {
          return {{"kind", "none"}};
        } else if constexpr (std::is_same_v<T, Assignment>) {
          json stations = json::array();
          for (const auto& s : p.stations) stations.push_back(json(std::vector<int>(s.begin(), s.end())));
          return {{"kind", "assignment"}, {"stations", stations}};
        } else if constexpr (std::is_same_v<T, BinaryString>) {
          std::string bits;
          for (auto b : p.bits) bits.push_back(b ? '1' : '0');
          return {{"kind", "binary"}, {"bits", bits}};
        } else {
          return {{"kind", "tokens"}, {"tokens", p.tokens}};
        }
      },
      design);
}

}  // namespace

SolutionSet parse_solution_set(const json& doc) {
  only_fields(doc, "$", {"objectives", "pool_size", "solutions"});
  SolutionSet set;
  const auto& objectives = as_array(required(doc, "$", "objectives"), "$.objectives");
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    set.objectives.push_back(parse_objective(objectives[i], fmt::format("$.objectives[{}]", i)));
  }
  if (auto it = doc.find("pool_size"); it != doc.end() && !it->is_null()) {
    set.pool_size = as_int(*it, "$.pool_size");
  }
  const auto& solutions = as_array(required(doc, "$", "solutions"), "$.solutions");
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const auto where = fmt::format("$.solutions[{}]", i);
    const auto& s = solutions[i];
    only_fields(s, where, {"id", "objectives", "design"});
    FrontSolution sol;
    sol.id = as_int(required(s, where, "id"), where + ".id");
    for (const auto& v : as_array(required(s, where, "objectives"), where + ".objectives")) {
      sol.objectives.push_back(as_number(v, where + ".objectives"));
    }
    sol.design = parse_design(required(s, where, "design"), where + ".design", sol.id);
    set.solutions.push_back(std::move(sol));
  }
  return validate_solution_set(std::move(set));
}

SolutionSet parse_solution_set_text(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) parse_fail("$", "malformed JSON");
  return parse_solution_set(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::ParseError, fmt::format("cannot open '{}'", path.string()), path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SolutionSet load_solution_set(const std::filesystem::path& path) {
  try {
    return parse_solution_set_text(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError || e.detail() == path.string()) throw;
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.what()), e.detail());
  }
}

json to_json(const SolutionSet& set) {
  json objectives = json::array();
  for (const auto& o : set.objectives) {
    objectives.push_back({{"name", o.name}, {"sense", std::string(to_string(o.sense))}});
  }
  json solutions = json::array();
  for (const auto& s : set.solutions) {
    solutions.push_back({{"id", s.id}, {"objectives", s.objectives}, {"design", design_to_json(s.design)}});
  }
  json doc = {{"objectives", objectives}, {"solutions", solutions}};
  if (set.pool_size) doc["pool_size"] = *set.pool_size;
  return doc;
}

SimilarityMatrix parse_similarity_matrix(const json& doc) {
  only_fields(doc, "$", {"n", "values"});
  const int n = as_int(required(doc, "$", "n"), "$.n");
  const auto& values = as_array(required(doc, "$", "values"), "$.values");
  if (n < 0 || values.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::PrecomputedInvalid,
                fmt::format("matrix declares n={} but has {} rows", n, values.size()), "n");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto where = fmt::format("$.values[{}]", i);
    std::vector<double> row;
    for (const auto& v : as_array(values[i], where)) row.push_back(as_number(v, where));
    rows.push_back(std::move(row));
  }
  return SimilarityMatrix::from_rows(rows);
}

SimilarityMatrix load_similarity_matrix(const std::filesystem::path& path) {
  json doc = json::parse(read_text_file(path), nullptr, false);
  if (doc.is_discarded()) parse_fail(path.string(), "malformed JSON");
  return parse_similarity_matrix(doc);
}

json to_json(const SimilarityMatrix& matrix) {
  return {{"n", matrix.size()}, {"values", matrix.rows()}};
}

}  // namespace mogram
