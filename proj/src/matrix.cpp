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

#include "ffperm/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace ffperm {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix::Matrix(const Field& field, std::vector<std::vector<FieldElem>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto x : row) {
      field_.check(x);
      data_.push_back(x);
    }
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::minor(std::size_t r, std::size_t c) const {
  Matrix out(field_, rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> Matrix::encodings() const {
  std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).value;
  }
  return out;
}

FieldElem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return f.one();
  Matrix a = m;
  FieldElem prev = f.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const FieldElem t = f.sub(f.mul(a(k, k), a(i, j)), f.mul(a(i, k), a(k, j)));
        a(i, j) = f.div(t, prev);
      }
      a(i, k) = f.zero();
    }
    prev = a(k, k);
  }
  const FieldElem det = a(n - 1, n - 1);
  return negate ? f.neg(det) : det;
}

FieldElem cofactor(const Matrix& m, std::size_t r, std::size_t c) {
  const FieldElem d = determinant(m.minor(r, c));
  return (r + c) % 2 == 0 ? d : m.field().neg(d);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(f, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    const FieldElem s = f.inv(a(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = f.mul(a(k, j), s);
      inv(k, j) = f.mul(inv(k, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const FieldElem factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(k, j)));
        inv(i, j) = f.sub(inv(i, j), f.mul(factor, inv(k, j)));
      }
    }
  }
  return inv;
}

std::size_t rank(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const FieldElem s = f.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const FieldElem factor = f.mul(a(i, c), s);
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
      }
    }
    ++r;
  }
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      FieldElem acc = f.zero();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  }
  return out;
}

}  // namespace ffperm
