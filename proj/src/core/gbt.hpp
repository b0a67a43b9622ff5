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
#include <span>
#include <string>
#include <vector>

#include "core/manifest.hpp"
#include "core/matrix.hpp"

namespace dialeval {

// Squared-error gradient boosting with exact greedy splits. Deterministic:
// identical (matrix, targets, config) produce a bit-identical model. Exact
// splits keep hand-solved fixtures exact; the corpora here are far too small
// for histogram binning to matter.
struct GbtConfig {
  int n_trees = 100;
  double learning_rate = 0.1;
  int max_depth = 3;
  int min_samples_leaf = 1;
  double subsample = 1.0;  // row fraction per boosting round, (0, 1]
  uint64_t seed = 0;

  void validate() const;
};

struct TreeNode {
  // Internal node: feature >= 0, threshold/left/right set.
  // Leaf: feature == -1, value set.
  int32_t feature = -1;
  double threshold = 0.0;
  int32_t left = -1;
  int32_t right = -1;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;  // preorder, root at 0

  double eval(std::span<const double> row) const;
};

struct GbtModel {
  double base_value = 0.0;
  double learning_rate = 0.1;
  int32_t feature_count = 0;
  std::vector<Tree> trees;

  // base_value + learning_rate * sum of tree outputs.
  double predict(std::span<const double> row) const;
  bool uses_feature(int feature) const;
};

GbtModel fit_gbt(const Matrix& matrix, std::span<const double> targets,
                 const GbtConfig& config);

// Versioned human-readable tree dump; doubles at 17 significant digits so
// predictions survive a round trip bit-exactly.
std::string serialize_gbt(const GbtModel& model);
GbtModel deserialize_gbt_text(const std::string& text);
void save_gbt(const GbtModel& model, const std::string& path,
              const RunManifest* manifest = nullptr);
GbtModel load_gbt(const std::string& path);

}  // namespace dialeval
