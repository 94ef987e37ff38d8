// Copyright 2026 The Stegkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEGKIT_TOOLS_CLI_HPP_
#define STEGKIT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stegkit/error.hpp"
#include "stegkit/media.hpp"
#include "stegkit/metrics.hpp"

namespace stegkit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitValidation = 2,
  kExitRecipe = 3,
  kExitInternal = 4,
};

// Diagnostic class printed as `error:<class>:` and the exit status for it.
std::string_view error_class(ErrorKind kind);
int exit_code(ErrorKind kind);

// Embeds message into cover at n = 1..8, extracts it back and measures both
// pairings. Rows come back ordered by n; with `parallel` the eight runs
// execute concurrently.
std::vector<QualityReport> sweep(const Image& cover, const Image& message,
                                 bool parallel = false);

// One image-in-image run at a single n, timed end to end.
QualityReport measure_plane_embedding(const Image& cover, const Image& message,
                                      int n);

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace stegkit::cli

#endif  // STEGKIT_TOOLS_CLI_HPP_
