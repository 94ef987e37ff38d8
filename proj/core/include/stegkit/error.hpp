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

#ifndef STEGKIT_ERROR_HPP_
#define STEGKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace stegkit {

// Failure classes shared by every module. The CLI maps each class onto an
// exit status and an `error:<class>:` diagnostic prefix.
enum class ErrorKind {
  kIo,
  kMalformed,       // header or chunk structure cannot be parsed
  kTruncated,       // payload shorter than the header promises
  kUnsupported,     // well-formed but outside the supported subset
  kInvalidArgument, // parameter outside its documented range
  kDimension,       // size/length mismatch between operands
  kCapacity,        // payload does not fit the carrier
  kRecipe,          // sidecar recipe missing, corrupt or inconsistent
  kModeMismatch,    // recipe mode does not match the operation
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stegkit

#endif  // STEGKIT_ERROR_HPP_
