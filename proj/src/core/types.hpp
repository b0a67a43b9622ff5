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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dialeval {

enum class Pos {
  noun,
  verb,
  adjective,
  adverb,
  conjunction,
  particle,
  auxiliary,
  interjection,
  pronoun,
  symbol,
  other,
};

// Content words: nouns, verbs, adjectives, adverbs, and conjunctions.
inline bool is_content_pos(Pos p) {
  switch (p) {
    case Pos::noun:
    case Pos::verb:
    case Pos::adjective:
    case Pos::adverb:
    case Pos::conjunction:
      return true;
    default:
      return false;
  }
}

const char* pos_name(Pos p);
// Unknown strings map to Pos::other; `known` reports whether the name matched.
Pos pos_from_name(const std::string& name, bool* known = nullptr);

enum class Speaker { user, system };
const char* speaker_name(Speaker s);

enum class Task { attentive_listening, job_interview, first_meeting, other };
const char* task_name(Task t);
std::optional<Task> task_from_name(const std::string& name);

enum class Setting { autonomous, woz, unknown };
const char* setting_name(Setting s);
std::optional<Setting> setting_from_name(const std::string& name);

struct Token {
  std::string surface;
  Pos pos = Pos::other;
  bool filler = false;
  bool disfluency = false;  // mutually exclusive with filler

  bool operator==(const Token&) const = default;
};

struct UtteranceSegment {
  Speaker speaker = Speaker::user;
  int64_t start_ms = 0;
  int64_t end_ms = 0;
  std::vector<Token> tokens;
  bool backchannel = false;
  bool laugh = false;

  bool operator==(const UtteranceSegment&) const = default;
};

struct Dialogue {
  std::string id;
  Task task = Task::other;
  Setting setting = Setting::unknown;
  std::optional<int64_t> session_duration_ms;
  std::vector<UtteranceSegment> segments;  // sorted by (start_ms, speaker)
  std::optional<std::vector<double>> item_scores;  // each in [1, 7]
  std::optional<double> score;                     // in [1, 7]

  bool has_usable_score() const {
    return score.has_value() ||
           (item_scores.has_value() && !item_scores->empty());
  }
  // Pre-averaged score wins over raw items.
  double usable_score() const;

  bool operator==(const Dialogue&) const = default;
};

struct Corpus {
  std::vector<Dialogue> dialogues;
  std::map<std::string, std::string> metadata;

  bool operator==(const Corpus&) const = default;
};

}  // namespace dialeval
