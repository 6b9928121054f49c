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

#include "mogram/error.hpp"

namespace mogram {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::PayloadMismatch: return "PayloadMismatch";
    case ErrorCode::ObjectiveArityMismatch: return "ObjectiveArityMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidObjectives: return "InvalidObjectives";
    case ErrorCode::InvalidIds: return "InvalidIds";
    case ErrorCode::TooFewSolutions: return "TooFewSolutions";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BothConfigsEmpty: return "BothConfigsEmpty";
    case ErrorCode::MetricPayloadMismatch: return "MetricPayloadMismatch";
    case ErrorCode::PrecomputedInvalid: return "PrecomputedInvalid";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
    case ErrorCode::InvalidDistance: return "InvalidDistance";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidStyle: return "InvalidStyle";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::TooFewRemaining: return "TooFewRemaining";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::UnknownSession: return "UnknownSession";
  }
  return "Unknown";
}

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::input: return "input";
    case Phase::similarity: return "similarity";
    case Phase::pathfinder: return "pathfinder";
    case Phase::layout: return "layout";
    case Phase::styling: return "styling";
    case Phase::session: return "session";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string detail)
    : std::runtime_error(message), code_(code), detail_(std::move(detail)) {}

Error Error::in_phase(Phase phase) const {
  Error copy = *this;
  if (!copy.phase_) copy.phase_ = phase;
  return copy;
}

}  // namespace mogram
