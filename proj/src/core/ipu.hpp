// Copyright 2025 dialeval authors
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

#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace dialeval {

inline constexpr int kDefaultIpuThresholdMs = 200;

// Inter-pausal unit: one speaker's maximal speech stretch with no internal
// silence of merge_threshold_ms or more.
struct Ipu {
  Speaker speaker = Speaker::user;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
  std::vector<Token> tokens;
  bool backchannel = false;
  bool laugh = false;
  // Floor-holding: neither a backchannel nor laugh-only. Backchannels and
  // token-free laughs acknowledge without taking the turn.
  bool is_floor = false;
};

struct IpuTimeline {
  std::vector<Ipu> ipus;  // sorted by start_ms
  int merge_threshold_ms = kDefaultIpuThresholdMs;
};

// Merges same-speaker segments whose gap is strictly below the threshold;
// a silence of exactly the threshold splits. Token lists concatenate and
// tags union across merged segments.
IpuTimeline segment_ipus(const Dialogue& dialogue,
                         int merge_threshold_ms = kDefaultIpuThresholdMs);

struct FloorTransition {
  Ipu from;  // system floor IPU
  Ipu to;    // next user floor IPU
  // Switching pause; negative when the user starts before the system ends.
  double gap_seconds() const {
    return static_cast<double>(to.start_ms - from.end_ms) / 1000.0;
  }
};

// Adjacent system->user pairs among floor IPUs ordered by start time
// (ties: system first). Non-floor IPUs are invisible to this scan.
std::vector<FloorTransition> floor_transitions(const IpuTimeline& timeline);

}  // namespace dialeval
