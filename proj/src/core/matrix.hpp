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

#include <cstddef>
#include <span>
#include <vector>

#include "core/error.hpp"

namespace dialeval {

// Dense row-major matrix. Small corpora, no BLAS needed.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(size_t r, size_t c) { return data[r * cols + c]; }
  double at(size_t r, size_t c) const { return data[r * cols + c]; }

  std::span<const double> row(size_t r) const {
    return std::span<const double>(data.data() + r * cols, cols);
  }
  std::span<double> row(size_t r) {
    return std::span<double>(data.data() + r * cols, cols);
  }

  template <typename Rows>
  static Matrix from_rows(const Rows& rows_in) {
    Matrix m;
    m.rows = rows_in.size();
    if (m.rows == 0) return m;
    m.cols = rows_in.front().size();
    m.data.reserve(m.rows * m.cols);
    for (const auto& r : rows_in) {
      if (r.size() != m.cols) fail_arg("Matrix::from_rows: ragged rows");
      m.data.insert(m.data.end(), r.begin(), r.end());
    }
    return m;
  }
};

}  // namespace dialeval
