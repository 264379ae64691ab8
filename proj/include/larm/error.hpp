// Copyright 2026 The larm Authors
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

#include <stdexcept>
#include <string>
#include <utility>

namespace larm {

enum class Err {
  kEmptyCorpus,
  kDimensionMismatch,
  kNonFiniteValue,
  kInvalidConfig,
  kEmptySplit,
  kNotSorted,
  kShapeMismatch,
  kUnknownAuthor,
  kUnknownUser,
  kZeroNormRow,
  kNoPositives,
  kMissingWindow,
  kKTooLarge,
  kEmptyWatchedSet,
  kInvalidK,
  kCorpusTooSmall,
  kCodeOutOfRange,
  kIdOutOfRange,
  kSingleClass,
  kNoEligibleUsers,
  kEmptyLog,
  kParseError,
  kUnknownKey,
  kMissingArtifact,
  kIoError,
};

// Carries a machine-checkable kind plus an optional index payload
// (row / line / author id, depending on the failure).
class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string msg, long long index = -1)
      : std::runtime_error(std::move(msg)), kind(kind), index(index) {}

  Err kind;
  long long index;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg,
                              long long index = -1) {
  throw Error(kind, msg, index);
}

inline void require(bool cond, Err kind, const std::string& msg,
                    long long index = -1) {
  if (!cond) fail(kind, msg, index);
}

}  // namespace larm
