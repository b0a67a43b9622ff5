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

#include "core/types.hpp"

#include "core/corpus.hpp"

namespace dialeval {

const char* pos_name(Pos p) {
  switch (p) {
    case Pos::noun: return "noun";
    case Pos::verb: return "verb";
    case Pos::adjective: return "adjective";
    case Pos::adverb: return "adverb";
    case Pos::conjunction: return "conjunction";
    case Pos::particle: return "particle";
    case Pos::auxiliary: return "auxiliary";
    case Pos::interjection: return "interjection";
    case Pos::pronoun: return "pronoun";
    case Pos::symbol: return "symbol";
    case Pos::other: return "other";
  }
  return "other";
}

Pos pos_from_name(const std::string& name, bool* known) {
  static const std::pair<const char*, Pos> table[] = {
      {"noun", Pos::noun},         {"verb", Pos::verb},
      {"adjective", Pos::adjective}, {"adverb", Pos::adverb},
      {"conjunction", Pos::conjunction}, {"particle", Pos::particle},
      {"auxiliary", Pos::auxiliary}, {"interjection", Pos::interjection},
      {"pronoun", Pos::pronoun},   {"symbol", Pos::symbol},
      {"other", Pos::other},
  };
  for (const auto& [n, p] : table) {
    if (name == n) {
      if (known) *known = true;
      return p;
    }
  }
  if (known) *known = false;
  return Pos::other;
}

const char* speaker_name(Speaker s) {
  return s == Speaker::user ? "user" : "system";
}

const char* task_name(Task t) {
  switch (t) {
    case Task::attentive_listening: return "attentive_listening";
    case Task::job_interview: return "job_interview";
    case Task::first_meeting: return "first_meeting";
    case Task::other: return "other";
  }
  return "other";
}

std::optional<Task> task_from_name(const std::string& name) {
  if (name == "attentive_listening") return Task::attentive_listening;
  if (name == "job_interview") return Task::job_interview;
  if (name == "first_meeting") return Task::first_meeting;
  if (name == "other") return Task::other;
  return std::nullopt;
}

const char* setting_name(Setting s) {
  switch (s) {
    case Setting::autonomous: return "autonomous";
    case Setting::woz: return "woz";
    case Setting::unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Setting> setting_from_name(const std::string& name) {
  if (name == "autonomous") return Setting::autonomous;
  if (name == "woz") return Setting::woz;
  if (name == "unknown") return Setting::unknown;
  return std::nullopt;
}

double Dialogue::usable_score() const {
  if (score.has_value()) return *score;
  return aggregate_score(item_scores.value());
}

}  // namespace dialeval
