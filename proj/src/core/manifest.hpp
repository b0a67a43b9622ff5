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
#include <utility>
#include <vector>

namespace dialeval {

// Reproducibility record attached to every output file. Text files embed it
// as leading '# key: value' comment lines; the JSONL corpus gets a sidecar
// '<path>.manifest'. With include_timestamp off the rendering is a pure
// function of the run, which is what the byte-identity checks rely on.
struct RunManifest {
  std::string command_line;
  bool include_timestamp = true;
  std::vector<std::pair<std::string, std::string>> config_echo;
  std::vector<std::pair<std::string, std::string>> input_digests;  // path -> sha256

  void echo(const std::string& key, const std::string& value) {
    config_echo.emplace_back(key, value);
  }
  void add_input(const std::string& path);  // digests the file now

  // '# key: value' lines, newline-terminated.
  std::string render_comment_lines() const;
};

}  // namespace dialeval
