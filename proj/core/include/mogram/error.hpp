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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mogram {

/// Every failure the library reports carries one of these codes. The names
/// are stable: they appear verbatim as `error_code` in service responses.
enum class ErrorCode {
  // solution sets
  ParseError,
  DuplicateId,
  PayloadMismatch,
  ObjectiveArityMismatch,
  NonFiniteValue,
  InvalidObjectives,
  InvalidIds,
  TooFewSolutions,
  // similarity
  LengthMismatch,
  BothConfigsEmpty,
  MetricPayloadMismatch,
  PrecomputedInvalid,
  // pathfinder
  InvalidParameter,
  NonSymmetricInput,
  NegativeDistance,
  InvalidDistance,
  TooLarge,
  // layout
  Disconnected,
  // styling
  ArityMismatch,
  InvalidStyle,
  InvalidRange,
  // session
  TooFewRemaining,
  UnknownId,
  UnknownSession,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Pipeline stage an error originated in, attached by the orchestration
/// layer when it propagates module errors.
enum class Phase { input, similarity, pathfinder, layout, styling, session };

std::string_view to_string(Phase phase) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<Phase>& phase() const noexcept { return phase_; }

  /// Returns a copy tagged with the stage it escaped from. An existing tag
  /// is kept, so the innermost phase wins.
  Error in_phase(Phase phase) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<Phase> phase_;
};

}  // namespace mogram
