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

namespace dialeval {

// Number rendering. fmt_g9 is the tabular precision for feature CSVs,
// fmt_g17 round-trips a double exactly.
std::string fmt_g9(double v);
std::string fmt_g17(double v);
std::string fmt_fixed(double v, int decimals);

// Locale-independent double/int parsing; the whole token must be consumed.
double parse_double(const std::string& s, const std::string& what);
long long parse_int(const std::string& s, const std::string& what);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

// Minimal CSV: fields are quoted only when they contain the separator, a
// quote, or a newline.
std::string csv_escape(const std::string& field, char sep = ',');
std::vector<std::string> csv_split_line(const std::string& line, char sep = ',');

}  // namespace dialeval
