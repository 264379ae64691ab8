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

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "larm/error.hpp"
#include "larm/rng.hpp"

namespace larm {

using Vec = std::vector<double>;

// Engagement tasks, in the fixed order used by every label array and by
// the interaction-log columns.
inline constexpr int kNumTasks = 6;
enum Task : int {
  kClick = 0,
  kLongView = 1,
  kEffectiveView = 2,
  kLike = 3,
  kComment = 4,
  kGift = 5,
};
inline constexpr std::array<std::string_view, kNumTasks> kTaskNames = {
    "click", "long_view", "effective_view", "like", "comment", "gift"};

// Watch time at or above this many seconds counts as a valid view, the
// eligibility bar for history sequences.
inline constexpr std::int64_t kValidViewSeconds = 3;

// One (user, author, session-window) exposure with per-task binary labels.
struct InteractionEvent {
  std::int64_t user_id = 0;
  std::int64_t author_id = 0;
  std::int64_t session_id = 0;
  std::int32_t window_index = 0;
  std::int64_t timestamp = 0;
  std::array<std::uint8_t, kNumTasks> labels{};
  std::int64_t watch_seconds = 0;

  bool operator==(const InteractionEvent&) const = default;

  bool valid_view() const { return watch_seconds >= kValidViewSeconds; }
};

// Integer triple produced by three-level residual quantization.
struct SemanticCode {
  std::int32_t c1 = 0;
  std::int32_t c2 = 0;
  std::int32_t c3 = 0;

  bool operator==(const SemanticCode&) const = default;
};

// Shared dimension of a corpus of embedding vectors, or an error when the
// corpus is empty, mixes dimensions, or contains non-finite entries.
inline std::size_t validate_corpus(const std::vector<Vec>& corpus) {
  require(!corpus.empty(), Err::kEmptyCorpus, "corpus is empty");
  std::size_t d = corpus.front().size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].size() != d) {
      fail(Err::kDimensionMismatch,
           "corpus row " + std::to_string(i) + " has dimension " +
               std::to_string(corpus[i].size()) + ", expected " +
               std::to_string(d),
           static_cast<long long>(i));
    }
    for (double v : corpus[i]) {
      if (!std::isfinite(v)) {
        fail(Err::kNonFiniteValue,
             "corpus row " + std::to_string(i) + " has a non-finite entry",
             static_cast<long long>(i));
      }
    }
  }
  return d;
}

// Label consistency used by the simulator and asserted by its tests: the
// deeper engagement labels imply a click.
inline bool labels_respect_hierarchy(const InteractionEvent& ev) {
  if (ev.labels[kClick]) return true;
  for (int t = 1; t < kNumTasks; ++t) {
    if (ev.labels[t]) return false;
  }
  return true;
}

}  // namespace larm
