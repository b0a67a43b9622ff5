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

#include <array>
#include <string>
#include <vector>

#include "core/ipu.hpp"
#include "core/manifest.hpp"
#include "core/types.hpp"

namespace dialeval {

inline constexpr int kFeatureCount = 11;

enum Feature {
  kUtteranceTimePerMin = 0,
  kIpuCountPerMin = 1,
  kWordCountPerMin = 2,
  kUniqueWordCountPerMin = 3,
  kContentWordCountPerMin = 4,
  kUniqueContentWordCountPerMin = 5,
  kBackchannelCountPerMin = 6,
  kFillerCountPerMin = 7,
  kLaughCountPerMin = 8,
  kDisfluencyCountPerMin = 9,
  kAvgSwitchPauseS = 10,
};

// Short column keys (f1..f11) and report display labels, both in canonical
// order.
extern const std::array<const char*, kFeatureCount> kFeatureShortNames;
extern const std::array<const char*, kFeatureCount> kFeatureDisplayNames;

struct FeatureVector {
  std::array<double, kFeatureCount> v{};
  // Set when the dialogue has no system->user floor transition; f11 is then
  // reported as 0.0 rather than NaN.
  bool no_transition = false;
};

struct ExtractOptions {
  int ipu_threshold_ms = kDefaultIpuThresholdMs;
  // Drop tokens of backchannel IPUs from all token-derived counts
  // (f3, f4, f5, f6, f8, f10). Off by default: backchannel words are words.
  bool exclude_backchannel_tokens = false;
};

// Session length in minutes: the declared duration wins over the observed
// segment span.
double dialogue_minutes(const Dialogue& dialogue);

FeatureVector extract_features(const Dialogue& dialogue,
                               const IpuTimeline& timeline,
                               const ExtractOptions& options = {});

// Feature matrix over a corpus, one row per dialogue in corpus order.
struct FeatureTable {
  std::vector<std::string> ids;
  std::vector<Task> tasks;
  std::vector<double> scores;
  std::vector<std::array<double, kFeatureCount>> rows;
  std::vector<uint8_t> no_transition;

  size_t size() const { return ids.size(); }
};

FeatureTable feature_matrix(const Corpus& corpus,
                            const ExtractOptions& options = {});

// CSV: header id,task,score,f1..f11,no_transition_flag; 9 significant digits.
void save_feature_csv(const FeatureTable& table, const std::string& path,
                      const RunManifest* manifest = nullptr);
FeatureTable load_feature_csv(const std::string& path);

}  // namespace dialeval
