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

#include "mpstab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace mpstab {
namespace {

double checked(double v) { return Scalar(v).raw(); }

}  // namespace

Vector::Vector(std::initializer_list<double> values) {
  data_.reserve(values.size());
  for (double v : values) data_.push_back(checked(v));
}

Vector::Vector(std::vector<double> values) : data_(std::move(values)) {
  for (double v : data_) checked(v);
}

Vector Vector::constant(std::size_t n, double value) {
  return Vector(std::vector<double>(n, checked(value)));
}

Scalar Vector::at(std::size_t i) const {
  if (i >= data_.size()) throw DimensionError("vector index out of range");
  return Scalar(data_[i]);
}

bool Vector::all_finite() const noexcept {
  return std::none_of(data_.begin(), data_.end(), [](double v) { return v == kEps; });
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) os << ", ";
    os << format_scalar(data_[i]);
  }
  os << ')';
  return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, kEps) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionError("matrix literal must be non-empty");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) m.data_[i * m.cols_ + j] = checked(rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 0.0;
  return m;
}

Matrix Matrix::column(const Vector& v) {
  Matrix m(v.size(), 1);
  std::copy(v.raw().begin(), v.raw().end(), m.data_.begin());
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  return Scalar(data_[i * cols_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
  if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  data_[i * cols_ + j] = v.raw();
}

Vector Matrix::col(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column index out of range");
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
  return Vector(std::move(out));
}

Vector Matrix::diagonal() const {
  const std::size_t n = std::min(rows_, cols_);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = data_[i * cols_ + i];
  return Vector(std::move(out));
}

bool Matrix::all_finite() const noexcept {
  return std::none_of(data_.begin(), data_.end(), [](double v) { return v == kEps; });
}

bool Matrix::has_finite_diagonal() const noexcept {
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    if (data_[i * cols_ + i] == kEps) return false;
  return true;
}

bool Matrix::is_integral() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return mpstab::is_integral(v); });
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row_raw(i);
    out[i].assign(r.begin(), r.end());
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << format_scalar(data_[i * cols_ + j]);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace mpstab
