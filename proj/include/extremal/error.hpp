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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace extremal {

enum class ErrorCode {
  kSelfLoop,
  kVertexOutOfRange,
  kOverflow,
  kUnsupportedT,
  kInsufficientPoints,
  kDisconnected,
  kInvalidConfig,
  kBudgetExceeded,
  kParseError,
  kTooLarge,
  kSpecError,
  kIoFailure,
  kInvalidParams,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies the failure
/// class; `line()` is set for errors tied to a position in an input file.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace extremal
