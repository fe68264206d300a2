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

#include "ffperm/expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffperm {

ExprTree ExprTree::var(std::size_t index) {
  ExprTree t;
  t.kind_ = Kind::var;
  t.index_ = index;
  return t;
}

ExprTree ExprTree::constant(FieldElem c) {
  ExprTree t;
  t.kind_ = Kind::constant;
  t.constant_ = c;
  return t;
}

ExprTree ExprTree::add(std::vector<ExprTree> terms) {
  if (terms.empty()) throw std::invalid_argument("add needs at least one term");
  ExprTree t;
  t.kind_ = Kind::add;
  t.children_ = std::move(terms);
  return t;
}

ExprTree ExprTree::mul(std::vector<ExprTree> factors) {
  if (factors.empty()) throw std::invalid_argument("mul needs at least one factor");
  ExprTree t;
  t.kind_ = Kind::mul;
  t.children_ = std::move(factors);
  return t;
}

ExprTree ExprTree::pow(ExprTree base, std::uint64_t exponent) {
  ExprTree t;
  t.kind_ = Kind::pow;
  t.exponent_ = exponent;
  t.children_.push_back(std::move(base));
  return t;
}

std::size_t ExprTree::arity() const {
  if (kind_ == Kind::var) return index_ + 1;
  std::size_t a = 0;
  for (const auto& c : children_) a = std::max(a, c.arity());
  return a;
}

std::size_t ExprTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children_) d = std::max(d, c.depth());
  return d + 1;
}

FieldElem ExprTree::eval(const Field& field, std::span<const FieldElem> args,
                         std::size_t max_depth) const {
  return eval_at(field, args, 1, max_depth);
}

FieldElem ExprTree::eval_at(const Field& field, std::span<const FieldElem> args,
                            std::size_t depth, std::size_t max_depth) const {
  if (depth > max_depth) {
    throw std::length_error("combiner nesting exceeds depth " + std::to_string(max_depth));
  }
  switch (kind_) {
    case Kind::var:
      if (index_ >= args.size()) {
        throw std::invalid_argument("combiner variable y" + std::to_string(index_) +
                                    " out of range (" + std::to_string(args.size()) +
                                    " inputs)");
      }
      return args[index_];
    case Kind::constant:
      field.check(constant_);
      return constant_;
    case Kind::add: {
      FieldElem acc = field.zero();
      for (const auto& c : children_) acc = field.add(acc, c.eval_at(field, args, depth + 1, max_depth));
      return acc;
    }
    case Kind::mul: {
      FieldElem acc = field.one();
      for (const auto& c : children_) acc = field.mul(acc, c.eval_at(field, args, depth + 1, max_depth));
      return acc;
    }
    case Kind::pow:
      return field.pow(children_[0].eval_at(field, args, depth + 1, max_depth), exponent_);
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace ffperm
