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


#ifndef FFPERM_TESTS_ORACLES_HPP_
#define FFPERM_TESTS_ORACLES_HPP_

// Reference computations used only by the tests. Each one avoids the library
// code path it checks, e.g. digit-level arithmetic instead of log tables and
// permutation expansion instead of elimination.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ffperm/fpoly.hpp"
#include "ffperm/gf.hpp"

namespace oracle {

using Digits = std::vector<std::uint32_t>;

inline Digits to_digits(std::uint64_t code, std::uint32_t p, unsigned m) {
  Digits d(m);
  for (unsigned i = 0; i < m; ++i, code /= p) d[i] = static_cast<std::uint32_t>(code % p);
  return d;
}

inline std::uint64_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint32_t p, unsigned m) {
  Digits x = to_digits(a, p, m), y = to_digits(b, p, m);
  for (unsigned i = 0; i < m; ++i) x[i] = (x[i] + y[i]) % p;
  return from_digits(x, p);
}

// Schoolbook product of digit vectors reduced by the monic modulus.
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint32_t p, const Digits& modulus) {
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  const Digits x = to_digits(a, p, m), y = to_digits(b, p, m);
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  for (std::size_t k = prod.size(); k-- > m;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (unsigned i = 0; i <= m; ++i) {
      prod[k - m + i] = (prod[k - m + i] + (p - lead) * modulus[i]) % p;
    }
  }
  Digits out(m);
  for (unsigned i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out, p);
}

inline int mobius(unsigned n) {
  int r = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      r = -r;
    }
  }
  return n > 1 ? -r : r;
}

// Number of monic irreducible polynomials of degree m over F_p.
inline std::int64_t irreducible_count(std::uint32_t p, unsigned m) {
  std::int64_t s = 0;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    std::int64_t pw = 1;
    for (unsigned i = 0; i < m / d; ++i) pw *= p;
    s += mobius(d) * pw;
  }
  return s / m;
}

// Horner evaluation straight from the coefficient list.
inline ffperm::FieldElem horner(const ffperm::Poly& f, ffperm::FieldElem x) {
  const ffperm::Field& F = f.field();
  ffperm::FieldElem acc = F.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[i]);
  return acc;
}

// Linear independence over F_q by checking every nontrivial combination.
inline bool independent(const std::vector<ffperm::FieldElem>& elems, const ffperm::SubfieldView& view) {
  const ffperm::Field& F = view.big();
  const auto sub = view.subfield_elements();
  const std::size_t k = elems.size();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < k && ++idx[i] == sub.size()) idx[i++] = 0;
    if (i == k) return true;
    ffperm::FieldElem s = F.zero();
    for (std::size_t j = 0; j < k; ++j) s = F.add(s, F.mul(sub[idx[j]], elems[j]));
    if (s.is_zero()) return false;
  }
}

// Determinant by the Leibniz expansion.
inline ffperm::FieldElem leibniz(const ffperm::Field& F,
                                 const std::vector<std::vector<ffperm::FieldElem>>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ffperm::FieldElem det = F.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    ffperm::FieldElem term = F.one();
    for (std::size_t i = 0; i < n; ++i) term = F.mul(term, a[i][perm[i]]);
    det = inversions % 2 ? F.sub(det, term) : F.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Number of invertible n x n matrices over the prime field F_p, counted by
// running integer row reduction on every matrix.
inline std::uint64_t invertible_matrix_count(std::uint32_t p, unsigned n) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n * n; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j, c /= p) m[i][j] = static_cast<std::int64_t>(c % p);
    unsigned rank = 0;
    for (unsigned col = 0; col < n && rank < n; ++col) {
      unsigned piv = rank;
      while (piv < n && m[piv][col] == 0) ++piv;
      if (piv == n) continue;
      std::swap(m[piv], m[rank]);
      std::int64_t inv = 1;
      while ((inv * m[rank][col]) % p != 1) ++inv;
      for (unsigned r = 0; r < n; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        const std::int64_t f = (m[r][col] * inv) % p;
        for (unsigned k = 0; k < n; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
      }
      ++rank;
    }
    count += rank == n;
  }
  return count;
}

// Bijections sigma of F with psi(sigma(x)) == phi(x) for every x, by scanning
// every permutation of the encodings.
inline std::uint64_t scan_compatible(const std::vector<ffperm::FieldElem>& phi,
                                     const std::vector<ffperm::FieldElem>& psi) {
  std::vector<std::size_t> sigma(phi.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t x = 0; ok && x < phi.size(); ++x) ok = psi[sigma[x]] == phi[x];
    count += ok;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

inline std::vector<ffperm::FieldElem> random_table(const ffperm::Field& F, std::mt19937_64& rng) {
  std::vector<ffperm::FieldElem> t;
  for (std::uint64_t x = 0; x < F.cardinality(); ++x) t.push_back(F.elem(rng() % F.cardinality()));
  return t;
}

inline std::vector<ffperm::FieldElem> random_permutation(const ffperm::Field& F, std::mt19937_64& rng) {
  auto t = F.elements();
  for (std::size_t i = t.size(); i > 1; --i) std::swap(t[i - 1], t[rng() % i]);
  return t;
}

inline ffperm::Poly random_poly(const ffperm::Field& F, std::mt19937_64& rng, std::size_t terms) {
  std::vector<ffperm::FieldElem> c;
  for (std::size_t i = 0; i < terms; ++i) c.push_back(F.elem(rng() % F.cardinality()));
  return ffperm::Poly(F, c);
}

inline bool bijective(const std::vector<ffperm::FieldElem>& t) {
  std::set<std::uint32_t> s;
  for (auto v : t) s.insert(v.value);
  return s.size() == t.size();
}

// Fields up to 64 elements used by the exhaustive property suites.
inline std::vector<std::pair<std::uint32_t, unsigned>> small_fields() {
  return {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4},
          {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}};
}

// (q, n) pairs with q^n <= 64.
inline std::vector<std::pair<std::uint64_t, unsigned>> small_extensions() {
  return {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {4, 2},
          {4, 3}, {5, 2}, {7, 2}, {8, 2}, {2, 1}, {3, 1}};
}

}  // namespace oracle

#endif  // FFPERM_TESTS_ORACLES_HPP_
