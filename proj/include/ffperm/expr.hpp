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

#ifndef FFPERM_EXPR_HPP_
#define FFPERM_EXPR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ffperm/gf.hpp"

namespace ffperm {

inline constexpr std::size_t kDefaultExprDepth = 64;

// A multivariate expression F(y_0, ..., y_{t-1}) over one field, built from
// variables and constants with n-ary sums, products and integer powers.
class ExprTree {
 public:
  enum class Kind { var, constant, add, mul, pow };

  static ExprTree var(std::size_t index);
  static ExprTree constant(FieldElem c);
  static ExprTree add(std::vector<ExprTree> terms);
  static ExprTree mul(std::vector<ExprTree> factors);
  static ExprTree pow(ExprTree base, std::uint64_t exponent);

  Kind kind() const { return kind_; }
  std::size_t var_index() const { return index_; }
  FieldElem constant_value() const { return constant_; }
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<ExprTree>& children() const { return children_; }

  // Number of variables referenced: 1 + the largest index, or 0.
  std::size_t arity() const;
  std::size_t depth() const;

  // Strict evaluation; throws std::invalid_argument for a variable index out of
  // range and std::length_error when nesting exceeds max_depth.
  FieldElem eval(const Field& field, std::span<const FieldElem> args,
                 std::size_t max_depth = kDefaultExprDepth) const;

 private:
  FieldElem eval_at(const Field& field, std::span<const FieldElem> args,
                    std::size_t depth, std::size_t max_depth) const;

  Kind kind_ = Kind::constant;
  std::size_t index_ = 0;
  FieldElem constant_{};
  std::uint64_t exponent_ = 0;
  std::vector<ExprTree> children_;
};

}  // namespace ffperm

#endif  // FFPERM_EXPR_HPP_
