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

#include "ffperm/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ffperm/permtool.hpp"
#include "parallel.hpp"

namespace ffperm {

namespace {

void require_quadratic(const SubfieldView& view) {
  if (view.n() != 2) {
    throw std::invalid_argument("the family lives over F_{q^2}; got relative degree " +
                                std::to_string(view.n()));
  }
}

bool norm_one(FieldElem a, const SubfieldView& view) {
  return view.big().pow(a, view.q() + 1) == view.big().one();
}

void require_norm_one(FieldElem a, const SubfieldView& view) {
  view.big().check(a);
  if (!norm_one(a, view)) {
    throw std::invalid_argument("a = " + std::to_string(a.value) + " does not satisfy a^{q+1} = 1");
  }
}

// x^q + a x
Poly phi_poly(FieldElem a, const SubfieldView& view) {
  const Field& F = view.big();
  return Poly::monomial(F, F.one(), view.q()) + Poly::monomial(F, a, 1);
}

Poly psi1_poly(FieldElem a, Variant variant, const SubfieldView& view) {
  const Field& F = view.big();
  if (variant == Variant::I) return phi_poly(a, view);
  return Poly::monomial(F, a, view.q()) + Poly::monomial(F, F.one(), 1);
}

// powers[i] = base^i for i = 0..q-1.
std::vector<Poly> powers_of(const Poly& base, std::uint64_t q) {
  std::vector<Poly> out{Poly::constant(base.field(), base.field().one())};
  for (std::uint64_t i = 1; i < q; ++i) out.push_back(out.back() * base);
  return out;
}

// Per-a polynomials shared by every tuple with that a.
struct APowers {
  std::vector<Poly> phi;   // (x^q + a x)^i
  std::vector<Poly> psi;   // psi_1^i
  Poly xq;
  Poly x;
};

APowers make_powers(FieldElem a, Variant variant, const SubfieldView& view) {
  const Field& F = view.big();
  return {powers_of(phi_poly(a, view), view.q()), powers_of(psi1_poly(a, variant, view), view.q()),
          Poly::monomial(F, F.one(), view.q()), Poly::identity(F)};
}

Poly build_f_raw(const FamilyParams& p, const APowers& pw) {
  Poly f = scale(pw.xq, p.u) + scale(pw.x, p.v);
  for (std::size_t i = 0; i < p.b.size(); ++i) f = f + scale(pw.phi[i + 1], p.b[i]);
  return f;
}

// (v - a u)^{-1} (x - g(c^{-1} psi_1) - u c^{-1} psi_1)
Poly closed_inverse_raw(const FamilyParams& p, const APowers& pw) {
  const Field& F = p.view.big();
  const FieldElem c_inv = F.inv(p.c);
  Poly g_part(F);
  FieldElem ck = F.one();
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    ck = F.mul(ck, c_inv);
    g_part = g_part + scale(pw.psi[i + 1], F.mul(p.b[i], ck));
  }
  const Poly inner = pw.x - g_part - scale(pw.psi[1], F.mul(p.u, c_inv));
  return scale(inner, F.inv(F.sub(p.v, F.mul(p.a, p.u))));
}

// psi_1(f(x)) == c (x^q + a x) at every x.
bool proof_identity_holds(const FamilyParams& p, std::span<const FieldElem> f_table) {
  const Field& F = p.view.big();
  const Poly psi = psi1_poly(p.a, p.variant, p.view);
  const Poly rhs = scale(phi_poly(p.a, p.view), p.c);
  for (const auto& x : F.elements()) {
    if (eval(psi, f_table[x.value]) != eval(rhs, x)) return false;
  }
  return true;
}

void check_params_shape(const FamilyParams& p) {
  require_quadratic(p.view);
  const Field& F = p.view.big();
  F.check(p.a);
  F.check(p.u);
  F.check(p.v);
  F.check(p.c);
  for (auto b : p.b) F.check(b);
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::I ? "I" : "II"; }

Variant parse_variant(const std::string& s) {
  if (s == "I" || s == "i" || s == "1") return Variant::I;
  if (s == "II" || s == "ii" || s == "2") return Variant::II;
  throw std::invalid_argument("variant must be I or II, got '" + s + "'");
}

std::vector<FieldElem> image_coset(FieldElem a, const SubfieldView& view) {
  require_quadratic(view);
  require_norm_one(a, view);
  const Field& F = view.big();
  const auto im = image(phi_poly(a, view));
  if (im.size() != view.q()) throw std::logic_error("Im(x^q + a x) does not have q elements");
  std::vector<FieldElem> fixed;
  for (const auto& y : F.elements()) {
    if (F.mul(a, F.pow(y, view.q())) == y) fixed.push_back(y);
  }
  if (fixed != im) throw std::logic_error("Im(x^q + a x) != {y : a y^q = y}");
  for (const auto& lambda : view.subfield_elements()) {
    for (const auto& y : im) {
      if (!std::binary_search(im.begin(), im.end(), F.mul(lambda, y))) {
        throw std::logic_error("Im(x^q + a x) is not closed under F_q scaling");
      }
    }
  }
  return im;
}

std::uint64_t affine_root_count(FieldElem a, FieldElem d, const SubfieldView& view) {
  require_quadratic(view);
  require_norm_one(a, view);
  const Field& F = view.big();
  F.check(d);
  std::uint64_t count = 0;
  for (const auto& x : F.elements()) {
    if (F.add(F.pow(x, view.q()), F.mul(a, x)) == d) ++count;
  }
  const bool solvable = F.mul(a, F.pow(d, view.q())) == d;
  if (count != (solvable ? view.q() : 0)) {
    throw std::logic_error("root count of x^q + a x - d is neither 0 nor q as predicted");
  }
  return count;
}

ParamVerdict validate_params(const FamilyParams& p) {
  check_params_shape(p);
  const SubfieldView& view = p.view;
  const Field& F = view.big();
  const std::uint64_t q = view.q();
  ParamVerdict v;
  auto fail = [&v](std::string cond, std::string detail) {
    v.failures.push_back({std::move(cond), std::move(detail)});
  };
  auto enc = [](FieldElem x) { return std::to_string(x.value); };

  if (p.b.size() != q - 1) {
    fail("b_length", "expected " + std::to_string(q - 1) + " coefficients b_1..b_{q-1}, got " +
                         std::to_string(p.b.size()));
  }
  const bool a_ok = norm_one(p.a, view);
  if (!a_ok) fail("a_norm", "a^{q+1} = " + enc(F.pow(p.a, q + 1)) + " != 1");
  if (F.mul(p.a, p.u) == p.v) fail("au_minus_v", "a u - v = 0");
  if (p.c.is_zero() || !view.contains(p.c)) fail("c_in_subfield", "c = " + enc(p.c) + " is not in F_q^*");

  // The remaining conditions need a^{-1}; with a = 0 they are meaningless.
  if (p.a.is_zero() || p.b.size() != q - 1) {
    v.valid = v.failures.empty();
    return v;
  }
  const FieldElem a_inv = F.inv(p.a);
  const FieldElem uq = F.pow(p.u, q);
  const FieldElem vq = F.pow(p.v, q);
  const FieldElem b1 = p.b.empty() ? F.zero() : p.b[0];
  const FieldElem b1q = F.pow(b1, q);
  FieldElem first, second;
  if (p.variant == Variant::I) {
    const FieldElem t = F.add(F.mul(b1q, a_inv), F.mul(b1, p.a));
    first = F.add(F.add(F.mul(p.a, p.u), vq), t);
    second = F.add(F.add(uq, F.mul(p.a, p.v)), F.mul(p.a, t));
  } else {
    const FieldElem t = F.add(b1q, b1);
    first = F.add(F.add(p.u, F.mul(p.a, vq)), t);
    second = F.add(F.add(F.mul(p.a, uq), p.v), F.mul(p.a, t));
  }
  if (first != p.c) fail("first_component", "first component is " + enc(first) + ", c = " + enc(p.c));
  const FieldElem ac = F.mul(p.a, p.c);
  if (second != ac) fail("second_component", "second component is " + enc(second) + ", a c = " + enc(ac));
  for (std::size_t i = 2; i < q; ++i) {
    const FieldElem bi = p.b[i - 1];
    const FieldElem biq = F.pow(bi, q);
    FieldElem lhs;
    if (p.variant == Variant::I) {
      // b_i^q a^{-i} + b_i a
      lhs = F.add(F.mul(biq, F.pow(a_inv, i)), F.mul(bi, p.a));
    } else {
      // b_i^q a^{1-i} + b_i
      lhs = F.add(F.mul(biq, F.pow(a_inv, i - 1)), bi);
    }
    if (!lhs.is_zero()) {
      fail("b_" + std::to_string(i), "condition on b_" + std::to_string(i) + " evaluates to " + enc(lhs));
    }
  }
  v.valid = v.failures.empty();
  return v;
}

Poly psi1(const FamilyParams& p) {
  require_quadratic(p.view);
  return psi1_poly(p.a, p.variant, p.view);
}

Poly build_f(const FamilyParams& p) {
  const ParamVerdict v = validate_params(p);
  if (!v.valid) {
    throw std::invalid_argument("invalid family parameters: " + v.failures.front().condition +
                                " (" + v.failures.front().detail + ")");
  }
  const Poly f = build_f_raw(p, make_powers(p.a, p.variant, p.view));
  const ValueTable t = tabulate(f);
  if (!is_permutation(t)) throw std::logic_error("family member is not a permutation");
  if (!proof_identity_holds(p, t)) throw std::logic_error("psi_1 o f != c (x^q + a x)");
  return f;
}

Poly closed_inverse(const FamilyParams& p) {
  const Poly f = build_f(p);
  const Poly inv = closed_inverse_raw(p, make_powers(p.a, p.variant, p.view));
  if (!(inv == brute_inverse(f))) {
    throw std::logic_error("closed-form inverse disagrees with the brute-force inverse");
  }
  return inv;
}

std::uint64_t predicted_family_count(std::uint64_t q) {
  std::uint64_t r = (q - 1) * (q - 1);
  for (std::uint64_t i = 0; i < q + 2; ++i) r *= q;
  return r;
}

EnumerationReport enumerate_family(std::uint64_t q, Variant variant,
                                   const EnumerationOptions& options) {
  if (q < 2 || q > kMaxEnumerationQ) {
    throw BoundExceeded("enumerate_family supports q in {2, 3, 4}; got q = " + std::to_string(q));
  }
  const SubfieldView view = SubfieldView::over(q, 2);
  const Field& F = view.big();
  const std::uint64_t Q = F.cardinality();

  EnumerationReport rep;
  rep.q = q;
  rep.variant = variant;
  rep.dedupe = options.dedupe;
  rep.predicted = predicted_family_count(q);
  rep.ceiling = 1;
  {
    boost::multiprecision::cpp_int fact = 1;
    for (std::uint64_t k = 2; k <= q; ++k) fact *= k;
    for (std::uint64_t k = 0; k < q; ++k) rep.ceiling *= fact;
  }

  std::vector<FieldElem> as;
  for (const auto& a : F.elements()) {
    if (norm_one(a, view)) as.push_back(a);
  }
  std::vector<FieldElem> cs;
  for (const auto& c : view.subfield_elements()) {
    if (!c.is_zero()) cs.push_back(c);
  }
  {
    std::uint64_t per_a = Q * Q * cs.size();
    for (std::uint64_t i = 1; i < q; ++i) per_a *= Q;
    rep.candidates = per_a * as.size();
  }

  // Work items are (a, v) pairs; each chunk keeps its own tallies.
  struct Tally {
    std::map<std::uint32_t, std::uint64_t> per_a;
    std::map<std::uint32_t, std::set<std::vector<std::uint32_t>>> distinct;
    bool all_pp = true, all_inv = true, all_identity = true;
    std::vector<FamilyParams> failures;
  };
  const unsigned workers = std::max(1u, options.parallelism);
  std::vector<Tally> tallies(workers);
  std::vector<APowers> powers;
  std::vector<std::vector<std::vector<FieldElem>>> b_sets;  // per a, per i >= 2
  for (const auto& a : as) {
    powers.push_back(make_powers(a, variant, view));
    // Solutions of the b_i condition, by exhaustive scan.
    std::vector<std::vector<FieldElem>> sets;
    const FieldElem a_inv = F.inv(a);
    for (std::uint64_t i = 2; i < q; ++i) {
      std::vector<FieldElem> sol;
      for (const auto& b : F.elements()) {
        const FieldElem bq = F.pow(b, q);
        const FieldElem lhs = variant == Variant::I
                                  ? F.add(F.mul(bq, F.pow(a_inv, i)), F.mul(b, a))
                                  : F.add(F.mul(bq, F.pow(a_inv, i - 1)), b);
        if (lhs.is_zero()) sol.push_back(b);
      }
      sets.push_back(std::move(sol));
    }
    b_sets.push_back(std::move(sets));
  }

  detail::parallel_chunks(as.size() * Q, workers, [&](std::size_t chunk, std::size_t begin,
                                                       std::size_t end) {
    Tally& tally = tallies[chunk];
    for (std::size_t item = begin; item < end; ++item) {
      const std::size_t ai = item / Q;
      const FieldElem a = as[ai];
      const FieldElem v = F.elem(item % Q);
      const APowers& pw = powers[ai];
      const auto& rest = b_sets[ai];
      auto& count = tally.per_a[a.value];
      for (const auto& u : F.elements()) {
        for (const auto& b1 : F.elements()) {
          for (const auto& c : cs) {
            FamilyParams p{view, a, u, v, c, {b1}, variant};
            p.b.resize(q - 1, F.zero());
            // Probe the (u, v, b_1, c) conditions with the first solution of
            // every b_i condition; the product over solution sets follows.
            bool solvable = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
              if (rest[i].empty()) {
                solvable = false;
                break;
              }
              p.b[i + 1] = rest[i][0];
            }
            if (!solvable || !validate_params(p).valid) continue;
            std::vector<std::size_t> idx(rest.size(), 0);
            while (true) {
              for (std::size_t i = 0; i < rest.size(); ++i) p.b[i + 1] = rest[i][idx[i]];
              if (!validate_params(p).valid) {
                throw std::logic_error("b_i solution set disagrees with validate_params");
              }
              ++count;
              const Poly f = build_f_raw(p, pw);
              const ValueTable t = tabulate(f);
              const bool pp = is_permutation(t);
              const bool identity = proof_identity_holds(p, t);
              const bool inv_ok = pp && closed_inverse_raw(p, pw) == brute_inverse(f);
              tally.all_pp = tally.all_pp && pp;
              tally.all_inv = tally.all_inv && inv_ok;
              tally.all_identity = tally.all_identity && identity;
              if ((!pp || !inv_ok || !identity) &&
                  tally.failures.size() < options.max_failures_kept) {
                tally.failures.push_back(p);
              }
              if (options.dedupe) tally.distinct[a.value].insert(f.encodings());
              std::size_t i = 0;
              while (i < idx.size() && ++idx[i] == rest[i].size()) idx[i++] = 0;
              if (i == idx.size()) break;
            }
          }
        }
      }
    }
  });

  std::map<std::uint32_t, std::set<std::vector<std::uint32_t>>> distinct;
  for (auto& t : tallies) {
    for (const auto& [a, n] : t.per_a) rep.per_a[a] += n;
    for (auto& [a, s] : t.distinct) distinct[a].merge(s);
    rep.all_pp = rep.all_pp && t.all_pp;
    rep.all_inv_ok = rep.all_inv_ok && t.all_inv;
    rep.all_identity_ok = rep.all_identity_ok && t.all_identity;
    for (auto& f : t.failures) {
      if (rep.failures.size() < options.max_failures_kept) rep.failures.push_back(std::move(f));
    }
  }
  for (const auto& a : as) rep.per_a.try_emplace(a.value, 0);
  for (const auto& [a, n] : rep.per_a) rep.tuples += n;
  if (options.dedupe) {
    std::set<std::vector<std::uint32_t>> all;
    for (auto& [a, s] : distinct) {
      rep.per_a_distinct[a] = s.size();
      all.insert(s.begin(), s.end());
    }
    rep.distinct = all.size();
  }
  rep.matches_total = rep.tuples == rep.predicted;
  rep.matches_per_a = std::all_of(rep.per_a.begin(), rep.per_a.end(),
                                  [&](const auto& kv) { return kv.second == rep.predicted; });
  return rep;
}

std::string to_string(MultReason r) {
  switch (r) {
    case MultReason::ok: return "ok";
    case MultReason::gcd_fails: return "gcd_fails";
    case MultReason::h_vanishes_on_mu: return "h_vanishes_on_mu";
    case MultReason::not_permuting_mu: return "not_permuting_mu";
  }
  return "unknown";
}

Poly mult_poly(std::uint64_t r, std::uint64_t s, const Poly& h) {
  const Field& F = h.field();
  const Poly xs = Poly::monomial(F, F.one(), s);
  return Poly::monomial(F, F.one(), r) * compose(h, xs);
}

MultVerdict mult_check(const Field& field, std::uint64_t r, std::uint64_t s, const Poly& h) {
  if (!(h.field() == field)) throw ContextMismatch("mult_check: h is over a different field");
  const std::uint64_t Q = field.cardinality();
  if (r == 0 || s == 0) throw std::invalid_argument("mult_check: r and s must be positive");
  if ((Q - 1) % s != 0) {
    throw std::invalid_argument("mult_check: s = " + std::to_string(s) + " does not divide " +
                                std::to_string(Q - 1));
  }
  field.require_exhaustive("mult_check");
  const std::uint64_t d = (Q - 1) / s;
  MultVerdict v;
  for (const auto& x : field.elements()) {
    if (!x.is_zero() && field.pow(x, d) == field.one()) v.mu.push_back(x);
  }
  v.gcd_ok = std::gcd(r, s) == 1;

  // x -> x^r h(x)^s on mu.
  bool vanishes = false;
  std::vector<FieldElem> hit;
  for (const auto& x : v.mu) {
    const FieldElem hx = eval(h, x);
    if (hx.is_zero()) {
      vanishes = true;
      v.witness = x;
      break;
    }
    hit.push_back(field.mul(field.pow(x, r), field.pow(hx, s)));
  }
  if (!vanishes) {
    std::sort(hit.begin(), hit.end());
    v.permutes_mu = hit == v.mu;
    if (!v.permutes_mu) {
      // First element of mu outside the image.
      for (const auto& m : v.mu) {
        if (!std::binary_search(hit.begin(), hit.end(), m)) {
          v.witness = m;
          break;
        }
      }
    }
  }
  v.pp = v.gcd_ok && v.permutes_mu;
  if (!v.gcd_ok) {
    v.reason = MultReason::gcd_fails;
  } else if (vanishes) {
    v.reason = MultReason::h_vanishes_on_mu;
  } else if (!v.permutes_mu) {
    v.reason = MultReason::not_permuting_mu;
  }
  if (v.pp != is_permutation(mult_poly(r, s, h))) {
    throw std::logic_error("multiplicative criterion disagrees with exhaustive bijectivity");
  }
  return v;
}

}  // namespace ffperm
