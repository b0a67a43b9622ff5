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

#include "core/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "core/error.hpp"
#include "core/io_util.hpp"
#include "json.hpp"

using nlohmann::json;

namespace dialeval {

namespace {

constexpr const char* kFormatKey = "dialeval_format";
constexpr int kFormatValue = 1;

[[noreturn]] void fail_line(size_t line_no, const std::string& msg) {
  fail_parse("line " + std::to_string(line_no) + ": " + msg);
}

int64_t require_int(const json& j, const char* key, size_t line_no) {
  if (!j.contains(key)) fail_line(line_no, std::string("missing '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    fail_line(line_no, std::string("'") + key + "' must be an integer");
  return v.get<int64_t>();
}

std::string require_string(const json& j, const char* key, size_t line_no) {
  if (!j.contains(key)) fail_line(line_no, std::string("missing '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_string())
    fail_line(line_no, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const char* what, size_t line_no) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok)
      fail_line(line_no, std::string("unknown key '") + it.key() + "' in " + what);
  }
}

Token parse_token(const json& j, size_t line_no, const std::string& where,
                  std::vector<std::string>* warnings) {
  if (!j.is_object()) fail_line(line_no, where + ": token must be an object");
  check_keys(j, {"surface", "pos", "tags"}, "token", line_no);
  Token t;
  t.surface = require_string(j, "surface", line_no);
  if (t.surface.empty()) fail_line(line_no, where + ": empty token surface");
  std::string pos = require_string(j, "pos", line_no);
  bool known = false;
  t.pos = pos_from_name(pos, &known);
  if (!known && warnings)
    warnings->push_back(where + ": unknown pos '" + pos + "' mapped to 'other'");
  if (j.contains("tags")) {
    const json& tags = j.at("tags");
    if (!tags.is_array()) fail_line(line_no, where + ": token tags must be an array");
    for (const json& tag : tags) {
      if (!tag.is_string()) fail_line(line_no, where + ": token tag must be a string");
      std::string s = tag.get<std::string>();
      if (s == "filler") t.filler = true;
      else if (s == "disfluency") t.disfluency = true;
      else fail_line(line_no, where + ": unknown token tag '" + s + "'");
    }
  }
  if (t.filler && t.disfluency)
    fail_line(line_no, where + ": token '" + t.surface +
                           "' tagged both filler and disfluency");
  return t;
}

UtteranceSegment parse_segment(const json& j, size_t line_no,
                               const std::string& dialogue_id, size_t seg_idx,
                               std::vector<std::string>* warnings) {
  std::string where = "dialogue '" + dialogue_id + "' segment " +
                      std::to_string(seg_idx);
  if (!j.is_object()) fail_line(line_no, where + ": segment must be an object");
  check_keys(j, {"speaker", "start_ms", "end_ms", "tokens", "tags"}, "segment",
             line_no);
  UtteranceSegment s;
  std::string sp = require_string(j, "speaker", line_no);
  if (sp == "user") s.speaker = Speaker::user;
  else if (sp == "system") s.speaker = Speaker::system;
  else fail_line(line_no, where + ": unknown speaker '" + sp + "'");
  s.start_ms = require_int(j, "start_ms", line_no);
  s.end_ms = require_int(j, "end_ms", line_no);
  if (j.contains("tokens")) {
    const json& tokens = j.at("tokens");
    if (!tokens.is_array())
      fail_line(line_no, where + ": tokens must be an array");
    size_t ti = 0;
    for (const json& tj : tokens) {
      s.tokens.push_back(parse_token(
          tj, line_no, where + " token " + std::to_string(ti), warnings));
      ++ti;
    }
  }
  if (j.contains("tags")) {
    const json& tags = j.at("tags");
    if (!tags.is_array()) fail_line(line_no, where + ": tags must be an array");
    for (const json& tag : tags) {
      if (!tag.is_string()) fail_line(line_no, where + ": tag must be a string");
      std::string t = tag.get<std::string>();
      if (t == "backchannel") s.backchannel = true;
      else if (t == "laugh") s.laugh = true;
      else fail_line(line_no, where + ": unknown segment tag '" + t + "'");
    }
  }
  return s;
}

Dialogue parse_dialogue(const json& j, size_t line_no,
                        std::vector<std::string>* warnings) {
  check_keys(j,
             {kFormatKey, "id", "task", "setting", "session_duration_ms",
              "segments", "item_scores", "score"},
             "dialogue", line_no);
  Dialogue d;
  d.id = require_string(j, "id", line_no);
  std::string task = require_string(j, "task", line_no);
  auto t = task_from_name(task);
  if (!t) fail_line(line_no, "unknown task '" + task + "'");
  d.task = *t;
  std::string setting = require_string(j, "setting", line_no);
  auto st = setting_from_name(setting);
  if (!st) fail_line(line_no, "unknown setting '" + setting + "'");
  d.setting = *st;
  if (j.contains("session_duration_ms"))
    d.session_duration_ms = require_int(j, "session_duration_ms", line_no);
  if (!j.contains("segments") || !j.at("segments").is_array())
    fail_line(line_no, "dialogue '" + d.id + "': missing segments array");
  size_t si = 0;
  for (const json& sj : j.at("segments")) {
    d.segments.push_back(parse_segment(sj, line_no, d.id, si, warnings));
    ++si;
  }
  if (j.contains("item_scores")) {
    const json& items = j.at("item_scores");
    if (!items.is_array())
      fail_line(line_no, "dialogue '" + d.id + "': item_scores must be an array");
    std::vector<double> scores;
    for (const json& v : items) {
      if (!v.is_number())
        fail_line(line_no, "dialogue '" + d.id + "': item score must be a number");
      scores.push_back(v.get<double>());
    }
    d.item_scores = std::move(scores);
  }
  if (j.contains("score")) {
    const json& v = j.at("score");
    if (!v.is_number())
      fail_line(line_no, "dialogue '" + d.id + "': score must be a number");
    d.score = v.get<double>();
  }
  return d;
}

json token_to_json(const Token& t) {
  json j;
  j["surface"] = t.surface;
  j["pos"] = pos_name(t.pos);
  if (t.filler || t.disfluency) {
    json tags = json::array();
    if (t.disfluency) tags.push_back("disfluency");
    if (t.filler) tags.push_back("filler");
    j["tags"] = tags;
  }
  return j;
}

json segment_to_json(const UtteranceSegment& s) {
  json j;
  j["speaker"] = speaker_name(s.speaker);
  j["start_ms"] = s.start_ms;
  j["end_ms"] = s.end_ms;
  json tokens = json::array();
  for (const Token& t : s.tokens) tokens.push_back(token_to_json(t));
  j["tokens"] = tokens;
  if (s.backchannel || s.laugh) {
    json tags = json::array();
    if (s.backchannel) tags.push_back("backchannel");
    if (s.laugh) tags.push_back("laugh");
    j["tags"] = tags;
  }
  return j;
}

json dialogue_to_json(const Dialogue& d) {
  json j;
  j[kFormatKey] = kFormatValue;
  j["id"] = d.id;
  j["task"] = task_name(d.task);
  j["setting"] = setting_name(d.setting);
  if (d.session_duration_ms) j["session_duration_ms"] = *d.session_duration_ms;
  json segs = json::array();
  for (const UtteranceSegment& s : d.segments) segs.push_back(segment_to_json(s));
  j["segments"] = segs;
  if (d.item_scores) j["item_scores"] = *d.item_scores;
  if (d.score) j["score"] = *d.score;
  return j;
}

}  // namespace

double aggregate_score(const std::vector<double>& item_scores) {
  if (item_scores.empty()) fail_invalid("aggregate_score: empty item list");
  double sum = std::accumulate(item_scores.begin(), item_scores.end(), 0.0);
  return sum / static_cast<double>(item_scores.size());
}

void validate_dialogue(Dialogue& d) {
  auto where = [&d](const std::string& detail) {
    return "dialogue '" + d.id + "': " + detail;
  };

  std::stable_sort(d.segments.begin(), d.segments.end(),
                   [](const UtteranceSegment& a, const UtteranceSegment& b) {
                     if (a.start_ms != b.start_ms) return a.start_ms < b.start_ms;
                     return static_cast<int>(a.speaker) < static_cast<int>(b.speaker);
                   });

  int64_t max_end = 0;
  for (size_t i = 0; i < d.segments.size(); ++i) {
    const UtteranceSegment& s = d.segments[i];
    std::string seg = "segment " + std::to_string(i);
    if (s.start_ms < 0) fail_invalid(where(seg + ": start_ms < 0"));
    if (s.end_ms <= s.start_ms)
      fail_invalid(where(seg + ": end_ms (" + std::to_string(s.end_ms) +
                         ") must exceed start_ms (" + std::to_string(s.start_ms) +
                         ")"));
    // Laughs may be token-free; system segments are tolerated token-free
    // because system-side transcripts are not always annotated.
    if (s.tokens.empty() && !s.laugh && s.speaker == Speaker::user)
      fail_invalid(where(seg + ": non-laugh user segment has no tokens"));
    for (const Token& t : s.tokens) {
      if (t.surface.empty()) fail_invalid(where(seg + ": empty token surface"));
      if (t.filler && t.disfluency)
        fail_invalid(where(seg + ": token tagged both filler and disfluency"));
    }
    max_end = std::max(max_end, s.end_ms);
  }

  // Same-speaker overlap is a data error; cross-speaker overlap is normal.
  for (Speaker sp : {Speaker::user, Speaker::system}) {
    int64_t prev_end = -1;
    size_t prev_idx = 0;
    for (size_t i = 0; i < d.segments.size(); ++i) {
      const UtteranceSegment& s = d.segments[i];
      if (s.speaker != sp) continue;
      if (prev_end > s.start_ms)
        fail_invalid(where("segments " + std::to_string(prev_idx) + " and " +
                           std::to_string(i) + " overlap for speaker " +
                           speaker_name(sp)));
      prev_end = s.end_ms;
      prev_idx = i;
    }
  }

  if (d.session_duration_ms && *d.session_duration_ms < max_end)
    fail_invalid(where("session_duration_ms (" +
                       std::to_string(*d.session_duration_ms) +
                       ") shorter than last segment end (" +
                       std::to_string(max_end) + ")"));

  if (d.item_scores) {
    if (d.item_scores->empty()) fail_invalid(where("item_scores is empty"));
    for (double v : *d.item_scores)
      if (v < 1.0 || v > 7.0)
        fail_invalid(where("item score " + std::to_string(v) +
                           " outside [1, 7]"));
  }
  if (d.score && (*d.score < 1.0 || *d.score > 7.0))
    fail_invalid(where("score " + std::to_string(*d.score) + " outside [1, 7]"));
}

void validate_corpus(Corpus& c) {
  std::set<std::string> ids;
  for (Dialogue& d : c.dialogues) {
    validate_dialogue(d);
    if (!ids.insert(d.id).second)
      fail_invalid("duplicate dialogue id '" + d.id + "'");
  }
}

Corpus corpus_from_jsonl(const std::string& text,
                         std::vector<std::string>* warnings) {
  Corpus corpus;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) fail_line(line_no, "empty line");
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      fail_line(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail_line(line_no, "record must be a JSON object");
    if (require_int(j, kFormatKey, line_no) != kFormatValue)
      fail_line(line_no, "unsupported dialeval_format (expected 1)");
    if (first && j.contains("corpus_metadata")) {
      check_keys(j, {kFormatKey, "corpus_metadata"}, "corpus header", line_no);
      const json& meta = j.at("corpus_metadata");
      if (!meta.is_object()) fail_line(line_no, "corpus_metadata must be an object");
      for (auto it = meta.begin(); it != meta.end(); ++it) {
        if (!it.value().is_string())
          fail_line(line_no, "corpus_metadata values must be strings");
        corpus.metadata[it.key()] = it.value().get<std::string>();
      }
      first = false;
      continue;
    }
    first = false;
    corpus.dialogues.push_back(parse_dialogue(j, line_no, warnings));
  }
  validate_corpus(corpus);
  return corpus;
}

std::string corpus_to_jsonl(const Corpus& corpus) {
  std::ostringstream out;
  if (!corpus.metadata.empty()) {
    json header;
    header[kFormatKey] = kFormatValue;
    json meta;
    for (const auto& [k, v] : corpus.metadata) meta[k] = v;
    header["corpus_metadata"] = meta;
    out << header.dump() << "\n";
  }
  for (const Dialogue& d : corpus.dialogues) out << dialogue_to_json(d).dump() << "\n";
  return out.str();
}

Corpus load_corpus(const std::string& path, std::vector<std::string>* warnings) {
  std::string text = read_file(path);
  try {
    return corpus_from_jsonl(text, warnings);
  } catch (Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void save_corpus(const Corpus& corpus, const std::string& path,
                 const RunManifest* manifest) {
  Corpus copy = corpus;
  validate_corpus(copy);
  atomic_write_file(path, corpus_to_jsonl(copy));
  if (manifest) atomic_write_file(path + ".manifest", manifest->render_comment_lines());
}

}  // namespace dialeval
