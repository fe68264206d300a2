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

#include "ffperm/linearized.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ffperm/permtool.hpp"

namespace ffperm {

namespace {

// Literal-composition cross-checks in trace_criterion stay below this size.
constexpr std::uint64_t kCompositionCheckScale = 1024;
constexpr std::size_t kCompositionSamples = 8;

constexpr std::uint64_t kMaxLinearizedEnumeration = std::uint64_t{1} << 20;

void check_length(std::span<const FieldElem> v, const SubfieldView& view, const char* what) {
  if (v.size() != view.n()) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(view.n()) +
                                " elements, got " + std::to_string(v.size()));
  }
  for (auto x : v) view.big().check(x);
}

// Tr(beta x) as a linearized polynomial: coefficients beta^{q^k}.
LinearizedPoly trace_functional(FieldElem beta, const SubfieldView& view) {
  std::vector<FieldElem> c;
  for (unsigned k = 0; k < view.n(); ++k) c.push_back(frobenius(beta, view, k));
  return LinearizedPoly(view, std::move(c));
}

}  // namespace

LinearizedPoly::LinearizedPoly(SubfieldView view, std::vector<FieldElem> coeffs)
    : view_(std::move(view)), a_(std::move(coeffs)) {
  check_length(a_, view_, "LinearizedPoly");
}

Poly LinearizedPoly::to_poly() const {
  const Field& F = field();
  Poly p(F);
  std::uint64_t e = 1;
  for (const auto& c : a_) {
    p = p + Poly::monomial(F, c, e);
    e *= view_.q();
  }
  return p;
}

FieldElem eval_lin(const LinearizedPoly& L, FieldElem x) {
  const Field& F = L.field();
  F.check(x);
  FieldElem acc = F.zero();
  FieldElem term = x;
  for (const auto& c : L.coeffs()) {
    acc = F.add(acc, F.mul(c, term));
    term = F.pow(term, L.view().q());
  }
  return acc;
}

ValueTable tabulate(const LinearizedPoly& L) {
  L.field().require_exhaustive("tabulate");
  ValueTable out;
  out.reserve(L.field().cardinality());
  for (const auto& x : L.field().elements()) out.push_back(eval_lin(L, x));
  return out;
}

Matrix dickson(const LinearizedPoly& L) {
  const std::size_t n = L.n();
  Matrix m(L.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = frobenius(L.coeff((j + n - i) % n), L.view(), i);
    }
  }
  return m;
}

void check_dickson_structure(const Matrix& m, const SubfieldView& view) {
  const std::size_t n = m.rows();
  if (m.cols() != n || n != view.n()) throw std::logic_error("Dickson matrix has the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != frobenius(m(0, (j + n - i) % n), view, i)) {
        throw std::logic_error("row " + std::to_string(i) +
                               " is not the shifted Frobenius of row 0");
      }
    }
  }
}

DetCofactors det_and_cofactors(const Matrix& dm, const SubfieldView& view) {
  check_dickson_structure(dm, view);
  const Field& F = dm.field();
  const std::size_t n = dm.rows();
  DetCofactors out{determinant(dm), {}};
  FieldElem expansion = F.zero();
  for (std::size_t i = 0; i < n; ++i) {
    out.cofactors.push_back(cofactor(dm, i, 0));
    // dm(i, 0) = a_{(n-i) mod n}^{q^i}
    expansion = F.add(expansion, F.mul(dm(i, 0), out.cofactors.back()));
  }
  if (expansion != out.determinant) {
    throw std::logic_error("cofactor expansion disagrees with the eliminated determinant");
  }
  return out;
}

LinearizedPoly cofactor_inverse(const LinearizedPoly& L) {
  const Field& F = L.field();
  const Matrix dm = dickson(L);
  const DetCofactors dc = det_and_cofactors(dm, L.view());
  if (dc.determinant.is_zero()) {
    throw std::domain_error("Dickson matrix is singular: L is not a permutation");
  }
  const FieldElem det_inv = F.inv(dc.determinant);
  std::vector<FieldElem> c;
  for (auto a : dc.cofactors) c.push_back(F.mul(a, det_inv));
  LinearizedPoly inv(L.view(), std::move(c));

  // Row 0 of D_L^{-1} = adj(D_L) / det carries the same coefficients.
  const Matrix dinv = inverse(dm);
  for (std::size_t i = 0; i < L.n(); ++i) {
    if (dinv(0, i) != inv.coeff(i)) {
      throw std::logic_error("cofactor inverse disagrees with row 0 of the inverse Dickson matrix");
    }
  }
  if (F.cardinality() <= F.max_cardinality()) {
    for (const auto& x : F.elements()) {
      if (eval_lin(inv, eval_lin(L, x)) != x) {
        throw std::logic_error("cofactor inverse fails at x = " + std::to_string(x.value));
      }
    }
  }
  if (F.cardinality() <= kDeskScale && !(inv.to_poly() == brute_inverse(L.to_poly()))) {
    throw std::logic_error("cofactor inverse disagrees with the brute-force inverse");
  }
  return inv;
}

LinearizedPoly from_trace_form(const TraceForm& tf) {
  check_length(tf.theta, tf.view, "from_trace_form theta");
  check_length(tf.omega, tf.view, "from_trace_form omega");
  const Field& F = tf.view.big();
  const std::size_t n = tf.view.n();
  std::vector<FieldElem> a(n, F.zero());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      a[k] = F.add(a[k], F.mul(tf.omega[i], frobenius(tf.theta[i], tf.view, k)));
    }
  }
  return LinearizedPoly(tf.view, std::move(a));
}

TraceForm to_trace_form(const LinearizedPoly& L, std::span<const FieldElem> theta) {
  check_length(theta, L.view(), "to_trace_form");
  const auto dual = dual_basis(theta, L.view());
  TraceForm tf{L.view(), {theta.begin(), theta.end()}, {}};
  for (const auto& d : dual) tf.omega.push_back(eval_lin(L, d));
  return tf;
}

bool pp_by_basis(const TraceForm& tf) { return is_basis(tf.omega, tf.view).basis; }

D1Result d1_check(const TraceForm& tf) {
  check_length(tf.theta, tf.view, "d1_check theta");
  check_length(tf.omega, tf.view, "d1_check omega");
  const Field& F = tf.view.big();
  const std::size_t n = tf.view.n();
  Matrix d1(F, n, n);
  std::vector<FieldElem> eta(n, F.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d1(i, j) = rel_trace(F.mul(tf.theta[i], tf.omega[j]), tf.view);
      eta[i] = F.add(eta[i], F.mul(tf.theta[j], d1(i, j)));
    }
  }
  const FieldElem det = determinant(d1);
  if (F.cardinality() <= kDeskScale) {
    const LinearizedPoly L = from_trace_form(tf);
    for (const auto& x : F.elements()) {
      const FieldElem lx = eval_lin(L, x);
      for (std::size_t i = 0; i < n; ++i) {
        if (rel_trace(F.mul(tf.theta[i], lx), tf.view) != rel_trace(F.mul(eta[i], x), tf.view)) {
          throw std::logic_error("Tr(theta_i L(x)) != Tr(eta_i x) at x = " +
                                 std::to_string(x.value));
        }
      }
    }
  }
  return {std::move(d1), det, !det.is_zero(), std::move(eta)};
}

TraceCriterionResult trace_criterion(const LinearizedPoly& L, std::span<const FieldElem> theta) {
  const SubfieldView& view = L.view();
  const Field& F = L.field();
  const TraceForm tf = to_trace_form(L, theta);
  TraceCriterionResult r;
  r.pp = true;

  auto closed_form = [&](FieldElem u) {
    FieldElem w = F.zero();
    for (std::size_t i = 0; i < view.n(); ++i) {
      w = F.add(w, F.mul(rel_trace(F.mul(tf.omega[i], u), view), tf.theta[i]));
    }
    return w;
  };
  for (std::uint64_t ui = 1; ui < F.cardinality(); ++ui) {
    if (closed_form(F.elem(ui)).is_zero()) {
      r.pp = false;
      r.witness = F.elem(ui);
      break;
    }
  }

  if (F.cardinality() <= kCompositionCheckScale) {
    std::vector<FieldElem> sample;
    for (std::uint64_t ui = 1; ui < F.cardinality() && sample.size() < kCompositionSamples; ++ui) {
      sample.push_back(F.elem(ui));
    }
    if (r.witness) sample.push_back(*r.witness);
    const Poly lp = L.to_poly();
    for (const auto& u : sample) {
      const Poly literal = compose(trace_functional(u, view).to_poly(), lp);
      const Poly closed = trace_functional(closed_form(u), view).to_poly();
      if (!(literal == closed)) {
        throw std::logic_error("Tr(u x) o L disagrees with Tr((sum Tr(omega_i u) theta_i) x) at u = " +
                               std::to_string(u.value));
      }
      ++r.cross_checked;
    }
  }
  return r;
}

BasisTraceResult basis_trace_test(std::span<const FieldElem> omega, const SubfieldView& view) {
  check_length(omega, view, "basis_trace_test");
  const Field& F = view.big();
  BasisTraceResult r;
  r.basis = true;
  for (std::uint64_t ui = 1; ui < F.cardinality(); ++ui) {
    const FieldElem u = F.elem(ui);
    const bool killed = std::all_of(omega.begin(), omega.end(), [&](FieldElem w) {
      return rel_trace(F.mul(u, w), view).is_zero();
    });
    if (killed) {
      r.basis = false;
      r.killer = u;
      break;
    }
  }
  if (r.basis != is_basis(omega, view).basis) {
    throw std::logic_error("trace test disagrees with the Moore determinant");
  }
  return r;
}

DegenerateMap degenerate_L(std::span<const FieldElem> theta, std::span<const FieldElem> v,
                           std::span<const FieldElem> a_coeffs, const SubfieldView& view) {
  if (view.n() < 2) {
    throw std::invalid_argument(
        "degenerate_L needs n >= 2: for n = 1 the map is a nonzero scalar multiple and permutes F_q");
  }
  check_length(theta, view, "degenerate_L theta");
  check_length(v, view, "degenerate_L v");
  check_length(a_coeffs, view, "degenerate_L a");
  if (!is_basis(theta, view).basis) throw std::invalid_argument("degenerate_L: theta is not a basis");
  if (!is_basis(v, view).basis) throw std::invalid_argument("degenerate_L: v is not a basis");
  const Field& F = view.big();
  for (auto a : a_coeffs) {
    if (a.is_zero() || !view.contains(a)) {
      throw std::invalid_argument("degenerate_L: coefficient " + std::to_string(a.value) +
                                  " is not in F_q^*");
    }
  }
  FieldElem omega = F.zero();
  for (std::size_t j = 0; j < view.n(); ++j) omega = F.add(omega, F.mul(a_coeffs[j], v[j]));

  std::vector<FieldElem> coeffs(view.n(), F.zero());
  for (std::size_t k = 0; k < view.n(); ++k) {
    FieldElem s = F.zero();
    for (const auto& t : theta) s = F.add(s, frobenius(t, view, k));
    coeffs[k] = F.mul(omega, s);
  }
  DegenerateMap out{LinearizedPoly(view, std::move(coeffs)), omega, {}, dual_basis(v, view)};

  const ValueTable table = tabulate(out.L);
  out.image = image(table);
  if (out.image.size() != view.q()) {
    throw std::logic_error("degenerate_L: image does not have q elements");
  }
  if (is_permutation(table)) throw std::logic_error("degenerate_L: map is a permutation");
  const auto sub = view.subfield_elements();
  for (const auto& e : out.dual_v) {
    ValueTable comp;
    for (auto y : table) comp.push_back(rel_trace(F.mul(e, y), view));
    if (!surjective_onto(comp, sub)) {
      throw std::logic_error("degenerate_L: Tr(e_j x) o L is not surjective onto F_q");
    }
  }
  return out;
}

std::vector<LinearizedPoly> all_linearized(const SubfieldView& view) {
  const Field& F = view.big();
  const std::uint64_t Q = F.cardinality();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < view.n(); ++i) {
    total *= Q;
    if (total > kMaxLinearizedEnumeration) {
      throw BoundExceeded("all_linearized: " + F.describe() + " has too many linearized maps");
    }
  }
  std::vector<LinearizedPoly> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<FieldElem> a;
    std::uint64_t c = code;
    for (unsigned i = 0; i < view.n(); ++i) {
      a.push_back(F.elem(c % Q));
      c /= Q;
    }
    out.emplace_back(view, std::move(a));
  }
  return out;
}

MinWitness min_trace_witness(const SubfieldView& view) {
  const Field& F = view.big();
  const std::uint64_t Q = F.cardinality();
  if (Q > kMinWitnessMaxCardinality) {
    throw BoundExceeded("min_trace_witness: " + F.describe() + " is above the search guard of " +
                        std::to_string(kMinWitnessMaxCardinality));
  }
  const std::size_t k_cand = static_cast<std::size_t>(Q - 1);  // beta = 1..Q-1, bit beta-1
  std::vector<std::uint32_t> masks;
  MinWitness out;
  for (const auto& L : all_linearized(view)) {
    const ValueTable table = tabulate(L);
    if (is_permutation(table)) continue;
    ++out.non_pp_maps;
    std::uint32_t mask = 0;
    for (std::size_t b = 0; b < k_cand; ++b) {
      const FieldElem beta = F.elem(b + 1);
      const bool kills = std::all_of(table.begin(), table.end(), [&](FieldElem y) {
        return rel_trace(F.mul(beta, y), view).is_zero();
      });
      if (kills) mask |= std::uint32_t{1} << b;
    }
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  // Subsets by increasing size; within a size, lexicographic over encodings.
  for (std::size_t size = 0; size <= k_cand; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint32_t chosen = 0;
      for (auto b : pick) chosen |= std::uint32_t{1} << b;
      const bool hits = std::all_of(masks.begin(), masks.end(),
                                    [chosen](std::uint32_t m) { return (m & chosen) != 0; });
      if (hits) {
        out.size = size;
        for (auto b : pick) out.witnesses.push_back(F.elem(b + 1));
        return out;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k_cand - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("min_trace_witness: the full F^* failed to annihilate every non-PP map");
}

}  // namespace ffperm
