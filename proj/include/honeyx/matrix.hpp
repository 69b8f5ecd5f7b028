// Copyright 2026 The Honey-X Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HONEYX_MATRIX_HPP_
#define HONEYX_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "honeyx/error.hpp"

namespace honeyx {

using Vector = std::vector<double>;

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Builds from nested braces, e.g. Matrix{{1, -1}, {-1, 1}}. All rows must
  // have the same length.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix FromRows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector col(std::size_t j) const;

  std::span<const double> data() const { return data_; }

  Matrix transposed() const;
  double min_entry() const;
  double max_entry() const;
  double max_abs() const;
  bool all_finite() const;

  // y = M x
  Vector multiply(std::span<const double> x) const;
  // y = M^T x
  Vector multiply_transposed(std::span<const double> x) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace honeyx

#endif  // HONEYX_MATRIX_HPP_
