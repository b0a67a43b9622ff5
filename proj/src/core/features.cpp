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

#include "core/features.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/io_util.hpp"
#include "core/text.hpp"

namespace dialeval {

const std::array<const char*, kFeatureCount> kFeatureShortNames = {
    "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11",
};

const std::array<const char*, kFeatureCount> kFeatureDisplayNames = {
    "Utterance time / min.",
    "# utterances (IPU segments) / min.",
    "# utterance words / min.",
    "# unique utterance words / min.",
    "# utterance content words / min.",
    "# unique utterance content words / min.",
    "# backchannels / min.",
    "# fillers / min.",
    "# laughs / min.",
    "# disfluencies / min.",
    "Average switching pause length",
};

double dialogue_minutes(const Dialogue& dialogue) {
  if (dialogue.session_duration_ms)
    return static_cast<double>(*dialogue.session_duration_ms) / 60000.0;
  if (dialogue.segments.empty())
    fail_invalid("dialogue '" + dialogue.id +
                 "': no segments and no declared session duration");
  int64_t lo = std::numeric_limits<int64_t>::max();
  int64_t hi = std::numeric_limits<int64_t>::min();
  for (const UtteranceSegment& s : dialogue.segments) {
    lo = std::min(lo, s.start_ms);
    hi = std::max(hi, s.end_ms);
  }
  return static_cast<double>(hi - lo) / 60000.0;
}

FeatureVector extract_features(const Dialogue& dialogue,
                               const IpuTimeline& timeline,
                               const ExtractOptions& options) {
  double minutes = dialogue_minutes(dialogue);
  if (minutes <= 0.0)
    fail_invalid("dialogue '" + dialogue.id + "': non-positive duration");

  double speech_ms = 0.0;
  long ipus = 0, backchannels = 0, laughs = 0;
  long words = 0, content_words = 0, fillers = 0, disfluencies = 0;
  std::set<std::string> unique_words;
  std::set<std::string> unique_content_words;

  for (const Ipu& ipu : timeline.ipus) {
    if (ipu.speaker != Speaker::user) continue;
    ++ipus;
    speech_ms += static_cast<double>(ipu.end_ms - ipu.start_ms);
    if (ipu.backchannel) ++backchannels;
    if (ipu.laugh) ++laughs;
    if (options.exclude_backchannel_tokens && ipu.backchannel) continue;
    for (const Token& t : ipu.tokens) {
      ++words;
      unique_words.insert(t.surface);
      if (is_content_pos(t.pos)) {
        ++content_words;
        unique_content_words.insert(t.surface);
      }
      if (t.filler) ++fillers;
      if (t.disfluency) ++disfluencies;
    }
  }

  FeatureVector fv;
  fv.v[kUtteranceTimePerMin] = speech_ms / 1000.0 / minutes;
  fv.v[kIpuCountPerMin] = static_cast<double>(ipus) / minutes;
  fv.v[kWordCountPerMin] = static_cast<double>(words) / minutes;
  fv.v[kUniqueWordCountPerMin] =
      static_cast<double>(unique_words.size()) / minutes;
  fv.v[kContentWordCountPerMin] = static_cast<double>(content_words) / minutes;
  fv.v[kUniqueContentWordCountPerMin] =
      static_cast<double>(unique_content_words.size()) / minutes;
  fv.v[kBackchannelCountPerMin] = static_cast<double>(backchannels) / minutes;
  fv.v[kFillerCountPerMin] = static_cast<double>(fillers) / minutes;
  fv.v[kLaughCountPerMin] = static_cast<double>(laughs) / minutes;
  fv.v[kDisfluencyCountPerMin] = static_cast<double>(disfluencies) / minutes;

  auto transitions = floor_transitions(timeline);
  if (transitions.empty()) {
    fv.v[kAvgSwitchPauseS] = 0.0;
    fv.no_transition = true;
  } else {
    double sum = 0.0;
    for (const FloorTransition& t : transitions) sum += t.gap_seconds();
    fv.v[kAvgSwitchPauseS] = sum / static_cast<double>(transitions.size());
  }
  return fv;
}

FeatureTable feature_matrix(const Corpus& corpus, const ExtractOptions& options) {
  FeatureTable table;
  table.ids.reserve(corpus.dialogues.size());
  for (const Dialogue& d : corpus.dialogues) {
    if (!d.has_usable_score())
      fail_invalid("dialogue '" + d.id + "' has no score and no item_scores");
    IpuTimeline timeline = segment_ipus(d, options.ipu_threshold_ms);
    FeatureVector fv = extract_features(d, timeline, options);
    table.ids.push_back(d.id);
    table.tasks.push_back(d.task);
    table.scores.push_back(d.usable_score());
    table.rows.push_back(fv.v);
    table.no_transition.push_back(fv.no_transition ? 1 : 0);
  }
  return table;
}

namespace {

std::string feature_csv_header() {
  std::string h = "id,task,score";
  for (const char* name : kFeatureShortNames) {
    h += ',';
    h += name;
  }
  h += ",no_transition_flag";
  return h;
}

}  // namespace

void save_feature_csv(const FeatureTable& table, const std::string& path,
                      const RunManifest* manifest) {
  std::ostringstream out;
  if (manifest) out << manifest->render_comment_lines();
  out << feature_csv_header() << "\n";
  for (size_t i = 0; i < table.size(); ++i) {
    out << csv_escape(table.ids[i]) << ',' << task_name(table.tasks[i]) << ','
        << fmt_g9(table.scores[i]);
    for (double v : table.rows[i]) out << ',' << fmt_g9(v);
    out << ',' << (table.no_transition[i] ? 1 : 0) << "\n";
  }
  atomic_write_file(path, out.str());
}

FeatureTable load_feature_csv(const std::string& path) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  bool header_seen = false;
  FeatureTable table;
  const std::string expected_header = feature_csv_header();
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!header_seen && line.rfind("# ", 0) == 0) continue;  // manifest lines
    if (!header_seen) {
      if (line != expected_header)
        fail_parse(path + ": line " + std::to_string(line_no) +
                   ": unexpected header (want '" + expected_header + "')");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = csv_split_line(line);
    if (fields.size() != 3 + kFeatureCount + 1)
      fail_parse(path + ": line " + std::to_string(line_no) + ": expected " +
                 std::to_string(3 + kFeatureCount + 1) + " fields, got " +
                 std::to_string(fields.size()));
    table.ids.push_back(fields[0]);
    auto task = task_from_name(fields[1]);
    if (!task)
      fail_parse(path + ": line " + std::to_string(line_no) +
                 ": unknown task '" + fields[1] + "'");
    table.tasks.push_back(*task);
    table.scores.push_back(parse_double(fields[2], "score"));
    std::array<double, kFeatureCount> row{};
    for (int f = 0; f < kFeatureCount; ++f)
      row[f] = parse_double(fields[3 + f], kFeatureShortNames[f]);
    table.rows.push_back(row);
    long long flag = parse_int(fields[3 + kFeatureCount], "no_transition_flag");
    table.no_transition.push_back(flag != 0 ? 1 : 0);
  }
  if (!header_seen) fail_parse(path + ": missing feature CSV header");
  return table;
}

}  // namespace dialeval
