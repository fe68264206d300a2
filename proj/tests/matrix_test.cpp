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


#include <gtest/gtest.h>

#include "ffperm/matrix.hpp"
#include "oracles.hpp"

using namespace ffperm;

namespace {

std::vector<std::vector<FieldElem>> random_rows(const Field& F, std::size_t n, std::mt19937_64& rng,
                                                bool sparse) {
  std::vector<std::vector<FieldElem>> rows(n, std::vector<FieldElem>(n));
  for (auto& r : rows)
    for (auto& x : r) x = (sparse && rng() % 3 == 0) ? F.zero() : F.elem(rng() % F.cardinality());
  return rows;
}

}  // namespace

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 4}, {7, 1}}) {
    const Field F = make_field(p, m);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        const auto rows = random_rows(F, n, rng, trial % 2);
        ASSERT_EQ(determinant(Matrix(F, rows)), oracle::leibniz(F, rows));
      }
    }
  }
}

TEST(Matrix, CofactorExpansionAlongFirstColumn) {
  std::mt19937_64 rng(5);
  const Field F = make_field(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix M(F, random_rows(F, 4, rng, false));
    FieldElem s = F.zero();
    for (std::size_t i = 0; i < 4; ++i) s = F.add(s, F.mul(M(i, 0), cofactor(M, i, 0)));
    EXPECT_EQ(s, determinant(M));
  }
}

TEST(Matrix, InverseAndRank) {
  std::mt19937_64 rng(9);
  const Field F = make_field(2, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix M(F, random_rows(F, 3, rng, true));
    const bool singular = determinant(M).is_zero();
    EXPECT_EQ(rank(M) == 3, !singular);
    if (singular) {
      EXPECT_THROW(inverse(M), std::domain_error);
    } else {
      EXPECT_EQ(multiply(M, inverse(M)), Matrix::identity(F, 3));
      EXPECT_EQ(multiply(inverse(M), M), Matrix::identity(F, 3));
    }
  }
}

TEST(Matrix, GeneralLinearGroupOrders) {
  // Independent count by integer row reduction, compared with the library.
  EXPECT_EQ(oracle::invertible_matrix_count(2, 2), 6u);
  EXPECT_EQ(oracle::invertible_matrix_count(2, 3), 168u);
  const Field F = make_field(2, 1);
  std::uint64_t lib = 0;
  for (std::uint64_t code = 0; code < 512; ++code) {
    Matrix M(F, 3, 3);
    for (std::size_t k = 0; k < 9; ++k) M(k / 3, k % 3) = F.elem((code >> k) & 1);
    lib += !determinant(M).is_zero();
  }
  EXPECT_EQ(lib, 168u);
}
