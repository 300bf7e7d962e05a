// Copyright 2026 The degrank Authors
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

#ifndef DEGRANK_ERROR_HPP_
#define DEGRANK_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace degrank {

// Values match degrank_status in degrank.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kSelfLoop = 2,
  kDuplicateEdge = 3,
  kEmptyEdgeSet = 4,
  kParse = 5,
  kIo = 6,
  kInvalidConfig = 7,
  kStuckWalk = 8,
  kInsufficientGraph = 9,
  kNoCollisions = 10,
  kDegenerateDegrees = 11,
  kNonScaleFree = 12,
  kUnknownNode = 13,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::uint64_t line = 0)
      : std::runtime_error(message), code_(code), line_(line) {}

  ErrorCode code() const { return code_; }
  // 1-based line number for kParse errors, 0 otherwise.
  std::uint64_t line() const { return line_; }

 private:
  ErrorCode code_;
  std::uint64_t line_;
};

}  // namespace degrank

#endif  // DEGRANK_ERROR_HPP_
