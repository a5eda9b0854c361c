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

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;        // bad flags or invalid parameters
inline constexpr int kExitParse = 3;        // malformed input or spec file
inline constexpr int kExitCheckFailed = 4;  // a verification check failed
inline constexpr int kExitIo = 5;           // file could not be read/written

/// Runs the command line `args` (args[0] is the program name). Outputs not
/// redirected with --out go to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace extremal::cli
