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

#ifndef FFPERM_FPOLY_HPP_
#define FFPERM_FPOLY_HPP_

// Polynomials over GF(Q) reduced modulo x^Q - x.
//
// Every Poly is kept in reduced form: degree < Q, trailing zeros trimmed.
// Reduction folds an exponent e >= Q to 1 + ((e - 1) mod (Q - 1)), which
// never produces exponent 0, so the induced map is preserved at x = 0 too.
// Two reduced polynomials are equal iff they induce the same map.

#include <cstdint>
#include <span>
#include <vector>

#include "ffperm/gf.hpp"

namespace ffperm {

// A map F_Q -> F_Q as a dense table indexed by element encoding.
using ValueTable = std::vector<FieldElem>;

std::uint64_t fold_exponent(std::uint64_t e, std::uint64_t q);

class Poly {
 public:
  explicit Poly(Field field);  // zero polynomial
  // Coefficients constant-term first; any length, reduced on construction.
  Poly(Field field, std::vector<FieldElem> coeffs);

  static Poly constant(const Field& field, FieldElem c);
  static Poly monomial(const Field& field, FieldElem c, std::uint64_t e);
  static Poly identity(const Field& field);  // x
  static Poly from_encodings(const Field& field, std::span<const std::uint64_t> coeffs);

  const Field& field() const { return field_; }
  std::span<const FieldElem> coeffs() const { return coeffs_; }
  std::vector<std::uint32_t> encodings() const;
  FieldElem coeff(std::size_t i) const;
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<FieldElem> coeffs_;
};

FieldElem eval(const Poly& f, FieldElem x);

// f(x) for every x, indexed by encoding.
ValueTable tabulate(const Poly& f);

enum class PolyOp { add, mul };

Poly poly_arith(PolyOp kind, const Poly& f, const Poly& g);
Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(const Poly& f, FieldElem c);
Poly pow(const Poly& f, std::uint64_t e);

// outer(inner(x)), reduced.
Poly compose(const Poly& outer, const Poly& inner);

// The unique reduced polynomial with the given value table (Lagrange basis
// 1 - (x - c)^{Q-1} over the full field).
Poly interpolate(const Field& field, std::span<const FieldElem> table);

}  // namespace ffperm

#endif  // FFPERM_FPOLY_HPP_
