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

#include "ffperm/fpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ffperm {

namespace {

void trim(std::vector<FieldElem>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void same_field(const Poly& f, const Poly& g) {
  if (!(f.field() == g.field())) {
    throw ContextMismatch("polynomials over different fields");
  }
}

}  // namespace

std::uint64_t fold_exponent(std::uint64_t e, std::uint64_t q) {
  if (e < q) return e;
  return 1 + (e - 1) % (q - 1);
}

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<FieldElem> coeffs) : field_(std::move(field)) {
  const std::uint64_t q = field_.cardinality();
  if (coeffs.size() <= q) {
    for (auto c : coeffs) field_.check(c);
    coeffs_ = std::move(coeffs);
  } else {
    coeffs_.assign(q, field_.zero());
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      field_.check(coeffs[e]);
      if (coeffs[e].is_zero()) continue;
      auto& slot = coeffs_[fold_exponent(e, q)];
      slot = field_.add(slot, coeffs[e]);
    }
  }
  trim(coeffs_);
}

Poly Poly::constant(const Field& field, FieldElem c) { return Poly(field, {c}); }

Poly Poly::monomial(const Field& field, FieldElem c, std::uint64_t e) {
  field.check(c);
  const std::uint64_t r = fold_exponent(e, field.cardinality());
  std::vector<FieldElem> coeffs(r + 1, field.zero());
  coeffs[r] = c;
  return Poly(field, std::move(coeffs));
}

Poly Poly::identity(const Field& field) { return monomial(field, field.one(), 1); }

Poly Poly::from_encodings(const Field& field, std::span<const std::uint64_t> coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field.elem(v));
  return Poly(field, std::move(c));
}

std::vector<std::uint32_t> Poly::encodings() const {
  std::vector<std::uint32_t> out;
  out.reserve(coeffs_.size());
  for (auto c : coeffs_) out.push_back(c.value);
  return out;
}

FieldElem Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

FieldElem eval(const Poly& f, FieldElem x) {
  const Field& F = f.field();
  F.check(x);
  FieldElem acc = F.zero();
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

ValueTable tabulate(const Poly& f) {
  const Field& F = f.field();
  F.require_exhaustive("tabulate");
  ValueTable out;
  out.reserve(F.cardinality());
  for (const auto& x : F.elements()) out.push_back(eval(f, x));
  return out;
}

Poly operator+(const Poly& f, const Poly& g) {
  same_field(f, g);
  const Field& F = f.field();
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<FieldElem> out(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = F.add(out[i], b[i]);
  return Poly(F, std::move(out));
}

Poly operator-(const Poly& f, const Poly& g) { return f + scale(g, g.field().neg(g.field().one())); }

Poly operator*(const Poly& f, const Poly& g) {
  same_field(f, g);
  const Field& F = f.field();
  if (f.is_zero() || g.is_zero()) return Poly(F);
  const std::uint64_t q = F.cardinality();
  const auto a = f.coeffs();
  const auto b = g.coeffs();
  std::vector<FieldElem> out(std::min<std::uint64_t>(a.size() + b.size() - 1, q), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      auto& slot = out[fold_exponent(i + j, q)];
      slot = F.add(slot, F.mul(a[i], b[j]));
    }
  }
  return Poly(F, std::move(out));
}

Poly poly_arith(PolyOp kind, const Poly& f, const Poly& g) {
  return kind == PolyOp::add ? f + g : f * g;
}

Poly scale(const Poly& f, FieldElem c) {
  const Field& F = f.field();
  std::vector<FieldElem> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x = F.mul(x, c);
  return Poly(F, std::move(out));
}

Poly pow(const Poly& f, std::uint64_t e) {
  Poly result = Poly::constant(f.field(), f.field().one());
  Poly base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly compose(const Poly& outer, const Poly& inner) {
  same_field(outer, inner);
  const Field& F = outer.field();
  // inner^{2^b}, grown on demand.
  std::vector<Poly> squares{inner};
  Poly result(F);
  const auto c = outer.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    Poly term = Poly::constant(F, c[k]);
    for (std::size_t e = k, b = 0; e > 0; e >>= 1, ++b) {
      if (b == squares.size()) squares.push_back(squares.back() * squares.back());
      if (e & 1) term = term * squares[b];
    }
    result = result + term;
  }
  return result;
}

Poly interpolate(const Field& field, std::span<const FieldElem> table) {
  field.require_exhaustive("interpolate");
  const std::uint64_t q = field.cardinality();
  if (table.size() != q) {
    throw std::invalid_argument("interpolate expects a table of length " +
                                std::to_string(q) + ", got " +
                                std::to_string(table.size()));
  }
  for (auto v : table) field.check(v);
  // (x - c)^{Q-1} = sum_k c^{Q-1-k} x^k, so the coefficient of x^k (k >= 1)
  // is -sum_c table[c] c^{Q-1-k}, and the constant term is table[0].
  std::vector<FieldElem> acc(q, field.zero());
  acc[0] = table[0];
  for (std::uint64_t ci = 0; ci < q; ++ci) {
    const FieldElem t = table[ci];
    if (t.is_zero()) continue;
    const FieldElem c = field.elem(ci);
    if (ci == 0) {
      acc[q - 1] = field.add(acc[q - 1], t);
      continue;
    }
    // c^{Q-1-k} for k = Q-1 down to 1.
    FieldElem pw = t;
    for (std::uint64_t k = q - 1; k >= 1; --k) {
      acc[k] = field.add(acc[k], pw);
      pw = field.mul(pw, c);
    }
  }
  for (std::uint64_t k = 1; k < q; ++k) acc[k] = field.neg(acc[k]);
  return Poly(field, std::move(acc));
}

}  // namespace ffperm
