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

namespace dialeval {

std::string read_file(const std::string& path);

// Writes to a temp file in the target directory, then renames over the
// destination. Nothing is left behind on failure.
void atomic_write_file(const std::string& path, const std::string& content);

// SHA-256 of the file contents, lowercase hex.
std::string file_digest_hex(const std::string& path);
std::string digest_hex(const std::string& bytes);

}  // namespace dialeval
