// Copyright 2026 The extremal-graphs Authors
//
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

#include "extremal/error.hpp"

namespace extremal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kUnsupportedT: return "UnsupportedT";
    case ErrorCode::kInsufficientPoints: return "InsufficientPoints";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSpecError: return "SpecError";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kInvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " at line " + std::to_string(*line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace extremal
