// Copyright (c) 2026 The mpstab Authors. All Rights Reserved.
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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mpstab/scalar.hpp"

namespace mpstab {

/// Dense column of extended scalars (event times x(k), eigenvectors, ...).
class Vector {
 public:
  Vector() = default;
  /// Length-n vector of ε.
  explicit Vector(std::size_t n) : data_(n, kEps) {}
  Vector(std::initializer_list<double> values);
  explicit Vector(std::vector<double> values);

  static Vector constant(std::size_t n, double value);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  Scalar operator[](std::size_t i) const { return Scalar(data_[i]); }
  Scalar at(std::size_t i) const;
  void set(std::size_t i, Scalar v) { data_.at(i) = v.raw(); }

  bool all_finite() const noexcept;

  std::span<const double> raw() const noexcept { return data_; }
  std::span<double> raw_mut() noexcept { return data_; }

  bool operator==(const Vector&) const = default;

  std::string to_string() const;

 private:
  std::vector<double> data_;
};

/// Dense row-major matrix over the max-plus semiring.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols matrix of ε. Both dimensions must be positive.
  Matrix(std::size_t rows, std::size_t cols);

  /// Row-wise literal; use kEps for ε entries.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  /// All-ε matrix ℰ.
  static Matrix epsilon(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Max-plus identity ℐ: 0 on the diagonal, ε elsewhere.
  static Matrix identity(std::size_t n);
  /// Single-column matrix holding v.
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_ && rows_ > 0; }

  Scalar operator()(std::size_t i, std::size_t j) const {
    return Scalar(data_[i * cols_ + j]);
  }
  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Scalar v);

  Vector col(std::size_t j) const;
  Vector diagonal() const;

  bool all_finite() const noexcept;
  bool has_finite_diagonal() const noexcept;
  bool is_integral() const noexcept;

  std::span<const double> raw() const noexcept { return data_; }
  std::span<double> raw_mut() noexcept { return data_; }
  std::span<const double> row_raw(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }
  std::span<double> row_raw_mut(std::size_t i) {
    return std::span<double>(data_).subspan(i * cols_, cols_);
  }

  bool operator==(const Matrix&) const = default;

  std::vector<std::vector<double>> to_rows() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace mpstab
