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

#ifndef FFPERM_GF_HPP_
#define FFPERM_GF_HPP_

// Exact arithmetic in GF(p^m) and the subfield tower F_q <= F_{q^n}.
//
// A field is identified by (p, m, modulus). Elements are stored by their
// canonical integer encoding index(e) = sum_i digit_i * p^i, where digit_i is
// the coefficient of z^i in the residue-class representative modulo the
// defining polynomial. The encoding is the only wire and display format.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffperm {

inline constexpr std::uint64_t kDefaultMaxCardinality = 65536;

// Largest cardinality any configuration may raise the bound to; the
// multiplication tables are O(Q) and encodings are 32-bit.
inline constexpr std::uint64_t kHardMaxCardinality = std::uint64_t{1} << 24;

// Thrown when an element or polynomial is used with a field it does not
// belong to.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an exhaustive operation would exceed the configured bound.
class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldElem {
  std::uint32_t value = 0;  // canonical encoding
  std::uint64_t ctx = 0;    // identity of the owning field

  std::uint32_t index() const { return value; }
  bool is_zero() const { return value == 0; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  // Sorting is by encoding; elements of one field only.
  friend auto operator<=>(const FieldElem& a, const FieldElem& b) {
    return a.value <=> b.value;
  }
};

enum class ArithOp { add, sub, mul, div };

class Field {
 public:
  // Builds GF(p^m). When `modulus` is empty, the monic irreducible of degree
  // m with the smallest encoding of its non-leading coefficients is used.
  // `modulus`, when given, lists coefficients constant-term first and must
  // have length m + 1 with a leading 1.
  static Field make(std::uint32_t p, unsigned m,
                    std::optional<std::vector<std::uint32_t>> modulus = {},
                    std::uint64_t max_cardinality = kDefaultMaxCardinality);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint64_t cardinality() const;
  std::uint64_t max_cardinality() const;
  std::span<const std::uint32_t> modulus() const;
  std::uint64_t id() const;

  FieldElem zero() const { return {0, id()}; }
  FieldElem one() const { return {1, id()}; }
  // Element with the given encoding; throws std::out_of_range if >= Q.
  FieldElem elem(std::uint64_t encoding) const;
  FieldElem from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(FieldElem x) const;
  // Embedding of the integer k via the prime subfield (k mod p).
  FieldElem from_int(std::int64_t k) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  // Throws std::domain_error when b is zero.
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  FieldElem arith(ArithOp kind, FieldElem a, FieldElem b) const;

  // Multiplicative order by repeated multiplication; 0 for the zero element.
  std::uint64_t order(FieldElem a) const;

  // Smallest-encoding element of multiplicative order Q - 1.
  FieldElem primitive_element() const;

  // All Q elements in encoding order.
  std::vector<FieldElem> elements() const;

  // Throws ContextMismatch unless x belongs to this field.
  void check(FieldElem x) const;
  bool owns(FieldElem x) const { return x.ctx == id(); }

  // Throws BoundExceeded when Q is above this field's exhaustive bound.
  void require_exhaustive(const char* what) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

inline Field make_field(std::uint32_t p, unsigned m,
                        std::optional<std::vector<std::uint32_t>> modulus = {},
                        std::uint64_t max_cardinality = kDefaultMaxCardinality) {
  return Field::make(p, m, std::move(modulus), max_cardinality);
}

bool is_prime(std::uint64_t n);

// Exhaustive factor scan over GF(p). `coeffs` is constant-term first.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs);

// Splits q = p^m; returns nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

// The pair F_q <= F_{q^n}, with F_{q^n} built once as GF(p^{m n}) and F_q its
// Frobenius-fixed subset.
class SubfieldView {
 public:
  SubfieldView(Field big, unsigned n);

  // Canonical GF(q^n) for q = p^m.
  static SubfieldView over(std::uint64_t q, unsigned n,
                           std::uint64_t max_cardinality = kDefaultMaxCardinality);

  const Field& big() const { return big_; }
  std::uint64_t q() const { return q_; }
  unsigned n() const { return n_; }

  bool contains(FieldElem x) const;  // x^q == x
  std::vector<FieldElem> subfield_elements() const;

 private:
  Field big_;
  std::uint64_t q_;
  unsigned n_;
};

// x^{q^k}.
FieldElem frobenius(FieldElem x, const SubfieldView& view, std::uint64_t k = 1);

// Tr(x) = x + x^q + ... + x^{q^{n-1}}.
FieldElem rel_trace(FieldElem x, const SubfieldView& view);

struct MooreResult {
  FieldElem determinant;
  bool basis = false;
};

// Moore determinant det(beta_i^{q^j}); nonzero iff the n elements are
// linearly independent over F_q.
MooreResult is_basis(std::span<const FieldElem> elems, const SubfieldView& view);

// Dual basis under the trace form, via inversion of the Gram matrix
// (Tr(theta_i theta_j)). Throws std::invalid_argument if theta is not a basis.
std::vector<FieldElem> dual_basis(std::span<const FieldElem> theta,
                                  const SubfieldView& view);

// Greedy basis of F_{q^n} over F_q taking the smallest encodings that are not
// in the span of the elements already chosen. For n = 2, q = 2 this is {1, z}.
std::vector<FieldElem> canonical_basis(const SubfieldView& view);

}  // namespace ffperm

#endif  // FFPERM_GF_HPP_
