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

#include "ffperm/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ffperm/matrix.hpp"

namespace ffperm {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of `num` modulo the monic `den` over GF(p); both constant-term
// first, result trimmed.
Digits poly_mod(Digits num, const Digits& den, std::uint32_t p) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) {
        const std::uint64_t sub = lead * den[i] % p;
        num[shift + i] = static_cast<std::uint32_t>((num[shift + i] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

// Product of two residues modulo the degree-m monic `modulus`.
Digits slow_mul(const Digits& a, const Digits& b, const Digits& modulus,
                std::uint32_t p) {
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  Digits r = poly_mod(std::move(prod), modulus, p);
  r.resize(modulus.size() - 1, 0);
  return r;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
  Digits f(coeffs.begin(), coeffs.end());
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Normalize to monic so every candidate divisor can be monic.
  std::uint64_t lead_inv = 1;
  for (std::uint64_t t = 1; t < p; ++t) {
    if (t * f.back() % p == 1) lead_inv = t;
  }
  for (auto& c : f) c = static_cast<std::uint32_t>(c * lead_inv % p);

  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(static_cast<std::uint32_t>(q), 1u);
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), m);
}

struct Field::Impl {
  std::uint32_t p = 2;
  unsigned m = 1;
  std::uint64_t q = 2;  // cardinality
  std::uint64_t bound = kDefaultMaxCardinality;
  Digits modulus;
  std::uint64_t id = 0;
  std::uint32_t generator = 1;
  // exp_table has length 2(Q-1) so that exp[log a + log b] needs no reduction.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;
  // Zech logarithm: g^{zech[k]} = 1 + g^k; kNoZech when 1 + g^k = 0.
  std::vector<std::uint32_t> zech;
  static constexpr std::uint32_t kNoZech = 0xffffffffu;

  Digits to_digits(std::uint64_t v) const {
    Digits d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    return d;
  }
  std::uint32_t from_digits(const Digits& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
  }
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < m; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return static_cast<std::uint32_t>(r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint64_t order = q - 1;
    const std::uint64_t la = log_table[a];
    const std::uint64_t k = (log_table[b] + order - la) % order;
    const std::uint32_t z = zech[k];
    if (z == kNoZech) return 0;
    return exp_table[la + z];
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (p == 2 || a == 0) return a;
    // -1 = g^{(Q-1)/2} for odd characteristic.
    return exp_table[log_table[a] + (q - 1) / 2];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[log_table[a] + log_table[b]];
  }
};

Field Field::make(std::uint32_t p, unsigned m,
                  std::optional<std::vector<std::uint32_t>> modulus,
                  std::uint64_t max_cardinality) {
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (max_cardinality > kHardMaxCardinality) {
    throw BoundExceeded("cardinality bound " + std::to_string(max_cardinality) +
                        " exceeds the hard limit " +
                        std::to_string(kHardMaxCardinality));
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > max_cardinality) {
      throw BoundExceeded("GF(" + std::to_string(p) + "^" + std::to_string(m) +
                          ") exceeds the cardinality bound " +
                          std::to_string(max_cardinality));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = q;
  impl->bound = max_cardinality;

  if (modulus) {
    Digits mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " +
                                  std::to_string(m));
    }
    for (auto c : mod) {
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (!is_irreducible(p, mod)) {
      throw std::invalid_argument("modulus is reducible over GF(" +
                                  std::to_string(p) + ")");
    }
    impl->modulus = std::move(mod);
  } else {
    for (std::uint64_t code = 0; code < q; ++code) {
      Digits mod = impl->to_digits(code);
      mod.push_back(1);
      if (is_irreducible(p, mod)) {
        impl->modulus = std::move(mod);
        break;
      }
    }
  }
  // The modulus encoding is < Q <= 2^24, p < 2^24 and m < 2^8, so the id is
  // an exact function of (p, m, modulus).
  const std::uint64_t mod_code =
      impl->from_digits(Digits(impl->modulus.begin(), impl->modulus.end() - 1));
  impl->id = (std::uint64_t{p} << 32) ^ (std::uint64_t{m} << 24) ^ mod_code ^
             (std::uint64_t{1} << 63);

  // Primitive element by order scan under schoolbook multiplication, then the
  // log/exp tables over it.
  const Digits one_d = impl->to_digits(1);
  if (q == 2) {
    impl->generator = 1;
  } else {
    for (std::uint64_t cand = 1; cand < q; ++cand) {
      const Digits g = impl->to_digits(cand);
      Digits acc = g;
      std::uint64_t ord = 1;
      while (acc != one_d) {
        acc = slow_mul(acc, g, impl->modulus, p);
        ++ord;
      }
      if (ord == q - 1) {
        impl->generator = static_cast<std::uint32_t>(cand);
        break;
      }
    }
  }
  const std::uint64_t order = q - 1;
  impl->exp_table.assign(2 * order, 0);
  impl->log_table.assign(q, 0);
  {
    const Digits g = impl->to_digits(impl->generator);
    Digits acc = one_d;
    for (std::uint64_t k = 0; k < order; ++k) {
      const std::uint32_t code = impl->from_digits(acc);
      impl->exp_table[k] = code;
      impl->exp_table[k + order] = code;
      impl->log_table[code] = static_cast<std::uint32_t>(k);
      acc = slow_mul(acc, g, impl->modulus, p);
    }
  }
  if (p != 2) {
    impl->zech.assign(order, Impl::kNoZech);
    for (std::uint64_t k = 0; k < order; ++k) {
      const std::uint32_t s = impl->digit_add(1, impl->exp_table[k]);
      if (s != 0) impl->zech[k] = impl->log_table[s];
    }
  }
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->m; }
std::uint64_t Field::cardinality() const { return impl_->q; }
std::uint64_t Field::max_cardinality() const { return impl_->bound; }
std::span<const std::uint32_t> Field::modulus() const { return impl_->modulus; }
std::uint64_t Field::id() const { return impl_->id; }

FieldElem Field::elem(std::uint64_t encoding) const {
  if (encoding >= impl_->q) {
    throw std::out_of_range("encoding " + std::to_string(encoding) +
                            " is not an element of " + describe());
  }
  return {static_cast<std::uint32_t>(encoding), impl_->id};
}

FieldElem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != impl_->m) {
    throw std::invalid_argument("expected " + std::to_string(impl_->m) + " digits");
  }
  for (auto d : digits) {
    if (d >= impl_->p) throw std::out_of_range("digit out of range");
  }
  return {impl_->from_digits(Digits(digits.begin(), digits.end())), impl_->id};
}

std::vector<std::uint32_t> Field::digits(FieldElem x) const {
  check(x);
  return impl_->to_digits(x.value);
}

FieldElem Field::from_int(std::int64_t k) const {
  const std::int64_t p = impl_->p;
  return {static_cast<std::uint32_t>(((k % p) + p) % p), impl_->id};
}

void Field::check(FieldElem x) const {
  if (x.ctx != impl_->id) {
    throw ContextMismatch("element does not belong to " + describe());
  }
}

void Field::require_exhaustive(const char* what) const {
  if (impl_->q > impl_->bound) {
    throw BoundExceeded(std::string(what) + ": " + describe() +
                        " exceeds the exhaustive bound");
  }
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {impl_->add(a.value, b.value), impl_->id};
}

FieldElem Field::neg(FieldElem a) const {
  check(a);
  return {impl_->neg(a.value), impl_->id};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {impl_->add(a.value, impl_->neg(b.value)), impl_->id};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  check(a);
  check(b);
  return {impl_->mul(a.value, b.value), impl_->id};
}

FieldElem Field::inv(FieldElem a) const {
  check(a);
  if (a.value == 0) throw std::domain_error("division by zero in " + describe());
  const std::uint64_t order = impl_->q - 1;
  return {impl_->exp_table[(order - impl_->log_table[a.value]) % order], impl_->id};
}

FieldElem Field::div(FieldElem a, FieldElem b) const {
  check(a);
  return mul(a, inv(b));
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  check(a);
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t order = impl_->q - 1;
  const std::uint64_t l = (std::uint64_t{impl_->log_table[a.value]} * (e % order)) % order;
  return {impl_->exp_table[l], impl_->id};
}

FieldElem Field::arith(ArithOp kind, FieldElem a, FieldElem b) const {
  switch (kind) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

std::uint64_t Field::order(FieldElem a) const {
  check(a);
  if (a.value == 0) return 0;
  std::uint64_t ord = 1;
  std::uint32_t acc = a.value;
  while (acc != 1) {
    acc = impl_->mul(acc, a.value);
    ++ord;
  }
  return ord;
}

FieldElem Field::primitive_element() const {
  return {impl_->generator, impl_->id};
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(impl_->q);
  for (std::uint64_t v = 0; v < impl_->q; ++v) {
    out.push_back({static_cast<std::uint32_t>(v), impl_->id});
  }
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << impl_->p;
  if (impl_->m > 1) os << "^" << impl_->m;
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  return a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m &&
         a.impl_->modulus == b.impl_->modulus;
}

// ---------------------------------------------------------------------------
// Subfield tower.

SubfieldView::SubfieldView(Field big, unsigned n) : big_(std::move(big)), n_(n) {
  if (n == 0 || big_.degree() % n != 0) {
    throw std::invalid_argument("relative degree " + std::to_string(n) +
                                " does not divide the extension degree of " +
                                big_.describe());
  }
  q_ = ipow(big_.characteristic(), big_.degree() / n);
}

SubfieldView SubfieldView::over(std::uint64_t q, unsigned n,
                                std::uint64_t max_cardinality) {
  const auto pm = prime_power(q);
  if (!pm) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (n == 0) throw std::invalid_argument("relative degree must be >= 1");
  return SubfieldView(make_field(pm->first, pm->second * n, {}, max_cardinality), n);
}

bool SubfieldView::contains(FieldElem x) const { return big_.pow(x, q_) == x; }

std::vector<FieldElem> SubfieldView::subfield_elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (const auto& x : big_.elements()) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

FieldElem frobenius(FieldElem x, const SubfieldView& view, std::uint64_t k) {
  const Field& f = view.big();
  f.check(x);
  k %= view.n();
  for (std::uint64_t i = 0; i < k; ++i) x = f.pow(x, view.q());
  return x;
}

FieldElem rel_trace(FieldElem x, const SubfieldView& view) {
  const Field& f = view.big();
  f.check(x);
  FieldElem acc = f.zero();
  FieldElem term = x;
  for (unsigned i = 0; i < view.n(); ++i) {
    acc = f.add(acc, term);
    term = f.pow(term, view.q());
  }
  return acc;
}

MooreResult is_basis(std::span<const FieldElem> elems, const SubfieldView& view) {
  const std::size_t n = view.n();
  if (elems.size() != n) {
    throw std::invalid_argument("is_basis expects exactly " + std::to_string(n) +
                                " elements, got " + std::to_string(elems.size()));
  }
  Matrix moore(view.big(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) moore(i, j) = frobenius(elems[i], view, j);
  }
  const FieldElem det = determinant(moore);
  return {det, !det.is_zero()};
}

std::vector<FieldElem> dual_basis(std::span<const FieldElem> theta,
                                  const SubfieldView& view) {
  if (!is_basis(theta, view).basis) {
    throw std::invalid_argument("dual_basis: input is not a basis over F_" +
                                std::to_string(view.q()));
  }
  const Field& f = view.big();
  const std::size_t n = theta.size();
  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gram(i, j) = rel_trace(f.mul(theta[i], theta[j]), view);
    }
  }
  const Matrix g_inv = inverse(gram);
  std::vector<FieldElem> dual(n, f.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      dual[j] = f.add(dual[j], f.mul(g_inv(k, j), theta[k]));
    }
  }
  return dual;
}

std::vector<FieldElem> canonical_basis(const SubfieldView& view) {
  const Field& f = view.big();
  const auto sub = view.subfield_elements();
  std::vector<FieldElem> basis;
  std::vector<bool> in_span(f.cardinality(), false);
  in_span[0] = true;
  std::vector<FieldElem> span_elems{f.zero()};
  for (const auto& x : f.elements()) {
    if (basis.size() == view.n()) break;
    if (in_span[x.value]) continue;
    basis.push_back(x);
    std::vector<FieldElem> grown;
    grown.reserve(span_elems.size() * sub.size());
    for (const auto& s : span_elems) {
      for (const auto& c : sub) {
        const FieldElem y = f.add(s, f.mul(c, x));
        if (!in_span[y.value]) in_span[y.value] = true;
        grown.push_back(y);
      }
    }
    span_elems = std::move(grown);
  }
  return basis;
}

}  // namespace ffperm
