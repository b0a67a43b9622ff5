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

#include "core/manifest.hpp"

#include <ctime>
#include <sstream>

#include "core/io_util.hpp"
#include "core/version.hpp"

namespace dialeval {

void RunManifest::add_input(const std::string& path) {
  input_digests.emplace_back(path, file_digest_hex(path));
}

std::string RunManifest::render_comment_lines() const {
  std::ostringstream out;
  out << "# dialeval_manifest: " << kManifestFormatVersion << "\n";
  out << "# tool_version: " << kToolVersion << "\n";
  if (!command_line.empty()) out << "# command: " << command_line << "\n";
  if (include_timestamp) {
    char buf[32];
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out << "# timestamp: " << buf << "\n";
  }
  for (const auto& [k, v] : config_echo) out << "# config " << k << ": " << v << "\n";
  for (const auto& [p, d] : input_digests)
    out << "# input " << p << ": sha256:" << d << "\n";
  return out.str();
}

}  // namespace dialeval
