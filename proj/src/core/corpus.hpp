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

#include <string>
#include <vector>

#include "core/manifest.hpp"
#include "core/types.hpp"

namespace dialeval {

// Corpus files are UTF-8 JSON lines, one dialogue per line, every line
// carrying "dialeval_format": 1. A corpus with non-empty metadata is
// prefixed by a single header line {"dialeval_format":1,"corpus_metadata":
// {...}} so that save/load round-trips the full in-memory value.
//
// Loading validates every type invariant; nothing partially loaded escapes.
// Unknown POS names degrade to "other" with a warning so corpora tagged with
// foreign tagsets still load.
Corpus load_corpus(const std::string& path,
                   std::vector<std::string>* warnings = nullptr);

void save_corpus(const Corpus& corpus, const std::string& path,
                 const RunManifest* manifest = nullptr);

// Canonical serialization used by save_corpus, exposed for tests.
std::string corpus_to_jsonl(const Corpus& corpus);
Corpus corpus_from_jsonl(const std::string& text,
                         std::vector<std::string>* warnings = nullptr);

// Arithmetic mean of questionnaire items; input must be non-empty.
double aggregate_score(const std::vector<double>& item_scores);

// Re-sorts segments and checks every invariant; throws Error on violation.
void validate_dialogue(Dialogue& d);
void validate_corpus(Corpus& c);

}  // namespace dialeval
