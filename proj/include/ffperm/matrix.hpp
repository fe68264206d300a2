// Copyright 2026 The ffperm Authors.
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

#ifndef FFPERM_MATRIX_HPP_
#define FFPERM_MATRIX_HPP_

#include <cstddef>
#include <vector>

#include "ffperm/gf.hpp"

namespace ffperm {

// Dense row-major matrix of elements of one field.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  Matrix(const Field& field, std::vector<std::vector<FieldElem>> rows);

  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  // Copy with row r and column c removed.
  Matrix minor(std::size_t r, std::size_t c) const;

  std::vector<std::vector<std::uint32_t>> encodings() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

// Fraction-free (Bareiss) elimination; the pivot in each column is the first
// nonzero entry at or below the diagonal.
FieldElem determinant(const Matrix& m);

// (-1)^{r+c} det(minor(r, c)).
FieldElem cofactor(const Matrix& m, std::size_t r, std::size_t c);

// Gauss-Jordan; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

std::size_t rank(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace ffperm

#endif  // FFPERM_MATRIX_HPP_
