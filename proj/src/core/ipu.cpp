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

#include "core/ipu.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace dialeval {

namespace {

void finalize(Ipu& ipu) {
  ipu.is_floor = !ipu.backchannel && !(ipu.laugh && ipu.tokens.empty());
}

}  // namespace

IpuTimeline segment_ipus(const Dialogue& dialogue, int merge_threshold_ms) {
  if (merge_threshold_ms <= 0)
    fail_arg("segment_ipus: merge threshold must be positive");

  IpuTimeline timeline;
  timeline.merge_threshold_ms = merge_threshold_ms;

  for (Speaker sp : {Speaker::user, Speaker::system}) {
    std::vector<const UtteranceSegment*> segs;
    for (const UtteranceSegment& seg : dialogue.segments)
      if (seg.speaker == sp) segs.push_back(&seg);
    std::stable_sort(segs.begin(), segs.end(),
                     [](const UtteranceSegment* a, const UtteranceSegment* b) {
                       return a->start_ms < b->start_ms;
                     });

    Ipu current;
    bool open = false;
    for (const UtteranceSegment* seg : segs) {
      if (open && seg->start_ms - current.end_ms < merge_threshold_ms) {
        current.end_ms = std::max(current.end_ms, seg->end_ms);
        current.tokens.insert(current.tokens.end(), seg->tokens.begin(),
                              seg->tokens.end());
        current.backchannel = current.backchannel || seg->backchannel;
        current.laugh = current.laugh || seg->laugh;
      } else {
        if (open) {
          finalize(current);
          timeline.ipus.push_back(std::move(current));
        }
        current = Ipu{};
        current.speaker = sp;
        current.start_ms = seg->start_ms;
        current.end_ms = seg->end_ms;
        current.tokens = seg->tokens;
        current.backchannel = seg->backchannel;
        current.laugh = seg->laugh;
        open = true;
      }
    }
    if (open) {
      finalize(current);
      timeline.ipus.push_back(std::move(current));
    }
  }

  std::stable_sort(timeline.ipus.begin(), timeline.ipus.end(),
                   [](const Ipu& a, const Ipu& b) { return a.start_ms < b.start_ms; });
  return timeline;
}

std::vector<FloorTransition> floor_transitions(const IpuTimeline& timeline) {
  std::vector<const Ipu*> floor;
  for (const Ipu& ipu : timeline.ipus)
    if (ipu.is_floor) floor.push_back(&ipu);

  std::stable_sort(floor.begin(), floor.end(), [](const Ipu* a, const Ipu* b) {
    if (a->start_ms != b->start_ms) return a->start_ms < b->start_ms;
    // Simultaneous starts: the system side sorts first.
    return a->speaker == Speaker::system && b->speaker == Speaker::user;
  });

  std::vector<FloorTransition> out;
  for (size_t i = 0; i + 1 < floor.size(); ++i) {
    if (floor[i]->speaker == Speaker::system &&
        floor[i + 1]->speaker == Speaker::user)
      out.push_back(FloorTransition{*floor[i], *floor[i + 1]});
  }
  return out;
}

}  // namespace dialeval
