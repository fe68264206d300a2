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

#include "ffperm/family.hpp"
#include "ffperm/permtool.hpp"
#include "oracles.hpp"

using namespace ffperm;

namespace {

FamilyParams params(std::uint64_t q, std::uint64_t a, std::uint64_t u, std::uint64_t v,
                    std::uint64_t c, std::vector<std::uint64_t> b, Variant var = Variant::II) {
  const SubfieldView view = SubfieldView::over(q, 2);
  const Field& F = view.big();
  std::vector<FieldElem> be;
  for (auto x : b) be.push_back(F.elem(x));
  return {view, F.elem(a), F.elem(u), F.elem(v), F.elem(c), be, var};
}

// The validity conditions written out directly, used as the counting oracle.
bool conditions_hold(const FamilyParams& p) {
  const Field& F = p.view.big();
  const std::uint64_t q = p.view.q();
  auto fr = [&](FieldElem x) { return F.pow(x, q); };
  const FieldElem a = p.a, u = p.u, v = p.v, c = p.c;
  if (F.pow(a, q + 1) != F.one() || c.is_zero() || fr(c) != c) return false;
  if (F.sub(F.mul(a, u), v).is_zero()) return false;
  const FieldElem ai = F.inv(a), b1 = p.b[0];
  FieldElem first, second;
  if (p.variant == Variant::I) {
    const FieldElem t = F.add(F.mul(fr(b1), ai), F.mul(b1, a));
    first = F.add(F.add(F.mul(a, u), fr(v)), t);
    second = F.add(F.add(fr(u), F.mul(a, v)), F.mul(a, t));
  } else {
    const FieldElem t = F.add(fr(b1), b1);
    first = F.add(F.add(u, F.mul(a, fr(v))), t);
    second = F.add(F.add(F.mul(a, fr(u)), v), F.mul(a, t));
  }
  if (first != c || second != F.mul(a, c)) return false;
  for (std::uint64_t i = 2; i < q; ++i) {
    const FieldElem bi = p.b[i - 1];
    const FieldElem lhs = p.variant == Variant::I
                              ? F.add(F.mul(fr(bi), F.pow(ai, i)), F.mul(bi, a))
                              : F.add(F.mul(fr(bi), F.pow(ai, i - 1)), bi);
    if (!lhs.is_zero()) return false;
  }
  return true;
}

// Valid tuples per a by iterating every (u, v, c, b) directly.
std::map<std::uint32_t, std::uint64_t> brute_counts(std::uint64_t q, Variant var) {
  const SubfieldView view = SubfieldView::over(q, 2);
  const Field& F = view.big();
  const std::uint64_t Q = F.cardinality();
  std::map<std::uint32_t, std::uint64_t> out;
  for (const auto& a : F.elements()) {
    if (F.pow(a, q + 1) != F.one()) continue;
    auto& n = out[a.value];
    for (const auto& c : view.subfield_elements()) {
      if (c.is_zero()) continue;
      std::uint64_t total = Q * Q;
      for (std::uint64_t i = 1; i < q; ++i) total *= Q;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t r = code;
        const FieldElem u = F.elem(r % Q);
        r /= Q;
        const FieldElem v = F.elem(r % Q);
        r /= Q;
        std::vector<FieldElem> b;
        for (std::uint64_t i = 1; i < q; ++i, r /= Q) b.push_back(F.elem(r % Q));
        FamilyParams p{view, a, u, v, c, b, var};
        const bool oracle_ok = conditions_hold(p);
        if (validate_params(p).valid != oracle_ok) {
          ADD_FAILURE() << "validate_params disagrees with the oracle at tuple " << code;
          return out;
        }
        n += oracle_ok;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Family, ValidateExamples) {
  EXPECT_TRUE(validate_params(params(2, 1, 1, 0, 1, {0})).valid);
  const ParamVerdict bad = validate_params(params(2, 1, 1, 2, 1, {0}));
  EXPECT_FALSE(bad.valid);
  ASSERT_FALSE(bad.failures.empty());
  EXPECT_EQ(bad.failures.front().condition, "first_component");
  const ParamVerdict a0 = validate_params(params(2, 0, 1, 0, 1, {0}));
  EXPECT_FALSE(a0.valid);
  EXPECT_EQ(a0.failures.front().condition, "a_norm");
  EXPECT_EQ(validate_params(params(2, 1, 1, 0, 1, {0, 0})).failures.front().condition, "b_length");
  const FamilyParams v1 = params(2, 1, 1, 0, 1, {0}, Variant::I);
  EXPECT_EQ(validate_params(v1).valid, conditions_hold(v1));
}

TEST(Family, BuildAndInvertExamples) {
  const Field F4 = make_field(2, 2), F9 = make_field(3, 2);
  const Poly x2 = Poly::monomial(F4, F4.one(), 2);
  EXPECT_EQ(build_f(params(2, 1, 1, 0, 1, {0})), x2);
  EXPECT_EQ(build_f(params(2, 1, 1, 0, 1, {1})), Poly::identity(F4));
  EXPECT_EQ(build_f(params(3, 1, 1, 0, 2, {2, 0})), Poly::monomial(F9, F9.elem(2), 1));
  EXPECT_EQ(closed_inverse(params(2, 1, 1, 0, 1, {0})), x2);
  EXPECT_EQ(closed_inverse(params(2, 1, 1, 0, 1, {1})), Poly::identity(F4));
  EXPECT_EQ(closed_inverse(params(3, 1, 1, 0, 2, {2, 0})), Poly::monomial(F9, F9.elem(2), 1));
  EXPECT_THROW(build_f(params(2, 1, 1, 2, 1, {0})), std::invalid_argument);
}

TEST(Family, VariantParsing) {
  EXPECT_EQ(parse_variant("I"), Variant::I);
  EXPECT_EQ(parse_variant("II"), Variant::II);
  EXPECT_THROW(parse_variant("III"), std::invalid_argument);
  EXPECT_EQ(to_string(Variant::I), "I");
}

TEST(Family, ImageCosetExamples) {
  const SubfieldView view = SubfieldView::over(2, 2);
  const Field& F = view.big();
  auto enc = [](const std::vector<FieldElem>& v) {
    std::vector<std::uint32_t> o;
    for (auto x : v) o.push_back(x.value);
    return o;
  };
  EXPECT_EQ(enc(image_coset(F.one(), view)), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(enc(image_coset(F.elem(2), view)), (std::vector<std::uint32_t>{0, 3}));
  EXPECT_EQ(enc(image_coset(F.elem(3), view)), (std::vector<std::uint32_t>{0, 2}));
  EXPECT_THROW(image_coset(F.zero(), view), std::invalid_argument);
}

TEST(Family, AffineRootCountExamples) {
  const SubfieldView view = SubfieldView::over(2, 2);
  const Field& F = view.big();
  EXPECT_EQ(affine_root_count(F.one(), F.one(), view), 2u);
  EXPECT_EQ(affine_root_count(F.one(), F.elem(2), view), 0u);
  EXPECT_EQ(affine_root_count(F.elem(2), F.elem(3), view), 2u);
}

// Over F_4 and F_9: root counts for every (a, d) with a^{q+1} = 1, by direct
// counting in the test.
TEST(Family, AffineRootCountExhaustive) {
  for (std::uint64_t q : {2, 3}) {
    const SubfieldView view = SubfieldView::over(q, 2);
    const Field& F = view.big();
    for (const auto& a : F.elements()) {
      if (F.pow(a, q + 1) != F.one()) continue;
      EXPECT_EQ(image_coset(a, view).size(), q);
      for (const auto& d : F.elements()) {
        std::uint64_t roots = 0;
        for (const auto& x : F.elements()) roots += F.add(F.pow(x, q), F.mul(a, x)) == d;
        const bool in_image = F.mul(a, F.pow(d, q)) == d;
        EXPECT_EQ(roots, in_image ? q : 0u);
        EXPECT_EQ(affine_root_count(a, d, view), roots);
      }
    }
  }
}

// The enumeration solves the b_i conditions per a and combines solution sets;
// a scan of every tuple must give the same per-a counts.
TEST(Family, EnumerationMatchesBruteScan) {
  for (std::uint64_t q : {2, 3}) {
    for (Variant var : {Variant::I, Variant::II}) {
      const EnumerationReport r = enumerate_family(q, var);
      EXPECT_EQ(r.per_a, brute_counts(q, var)) << "q=" << q << " variant " << to_string(var);
      EXPECT_TRUE(r.all_pp);
      EXPECT_TRUE(r.all_inv_ok);
      EXPECT_TRUE(r.all_identity_ok);
      EXPECT_TRUE(r.failures.empty());
    }
  }
}

TEST(Family, EnumerationReportFields) {
  const EnumerationReport r = enumerate_family(2, Variant::II);
  EXPECT_EQ(r.predicted, 16u);
  EXPECT_EQ(r.per_a.size(), 3u);
  EXPECT_EQ(r.ceiling, 4);
  EXPECT_EQ(r.matches_total, r.tuples == 16u);
  EXPECT_EQ(enumerate_family(3, Variant::II).predicted, 972u);
  EXPECT_THROW(enumerate_family(5, Variant::II), BoundExceeded);
  EXPECT_THROW(enumerate_family(1, Variant::II), BoundExceeded);
}

TEST(Family, ParallelEnumerationIsDeterministic) {
  EnumerationOptions par;
  par.parallelism = 4;
  const EnumerationReport a = enumerate_family(3, Variant::I);
  const EnumerationReport b = enumerate_family(3, Variant::I, par);
  EXPECT_EQ(a.per_a, b.per_a);
  EXPECT_EQ(a.per_a_distinct, b.per_a_distinct);
  EXPECT_EQ(a.distinct, b.distinct);
}

// For random valid tuples at q = 4: the inverse composes to x on both sides,
// and the proof identity holds pointwise.
TEST(Family, RandomValidTuplesAtQ4) {
  std::mt19937_64 rng(50);
  const SubfieldView view = SubfieldView::over(4, 2);
  const Field& F = view.big();
  std::vector<FieldElem> as, cs;
  for (const auto& a : F.elements())
    if (F.pow(a, 5) == F.one()) as.push_back(a);
  for (const auto& c : view.subfield_elements())
    if (!c.is_zero()) cs.push_back(c);
  int found = 0;
  for (int t = 0; t < 200000 && found < 20; ++t) {
    for (Variant var : {Variant::I, Variant::II}) {
      std::vector<FieldElem> b;
      for (int i = 0; i < 3; ++i) b.push_back(F.elem(rng() % 16));
      FamilyParams p{view, as[rng() % as.size()], F.elem(rng() % 16), F.elem(rng() % 16),
                     cs[rng() % cs.size()], b, var};
      if (!conditions_hold(p)) continue;
      ++found;
      const Poly f = build_f(p), g = closed_inverse(p);
      EXPECT_EQ(compose(f, g), Poly::identity(F));
      EXPECT_EQ(compose(g, f), Poly::identity(F));
      const Poly lhs = compose(psi1(p), f);
      const Poly rhs = scale(Poly::monomial(F, F.one(), 4) + Poly::monomial(F, p.a, 1), p.c);
      EXPECT_EQ(lhs, rhs);
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Mult, F7Examples) {
  const Field F = make_field(7, 1);
  const Poly one = Poly::constant(F, F.one());
  EXPECT_TRUE(mult_check(F, 5, 3, one).pp);
  const MultVerdict v = mult_check(F, 2, 3, one);
  EXPECT_FALSE(v.pp);
  EXPECT_TRUE(v.gcd_ok);
  EXPECT_EQ(v.reason, MultReason::not_permuting_mu);
  EXPECT_TRUE(mult_check(F, 1, 1, one).pp);
  const MultVerdict g = mult_check(F, 2, 2, one);
  EXPECT_FALSE(g.gcd_ok);
  EXPECT_EQ(g.reason, MultReason::gcd_fails);
  EXPECT_THROW(mult_check(F, 1, 4, one), std::invalid_argument);
  EXPECT_THROW(mult_check(F, 0, 2, one), std::invalid_argument);
}

TEST(Mult, VanishingHIsReportedDistinctly) {
  const Field F = make_field(7, 1);
  // h(x) = x - 1 vanishes at 1, which lies in every mu.
  const Poly h = Poly::from_encodings(F, std::vector<std::uint64_t>{6, 1});
  const MultVerdict v = mult_check(F, 1, 3, h);
  EXPECT_FALSE(v.pp);
  EXPECT_EQ(v.reason, MultReason::h_vanishes_on_mu);
  EXPECT_EQ(v.witness, F.one());
}

TEST(Mult, AgreesWithBruteForce) {
  std::mt19937_64 rng(60);
  for (std::uint64_t q : {7, 9}) {
    const Field F = make_field(static_cast<std::uint32_t>(prime_power(q)->first), prime_power(q)->second);
    for (std::uint64_t s = 1; s < q; ++s) {
      if ((q - 1) % s) continue;
      for (std::uint64_t r = 1; r < q; ++r) {
        for (std::uint64_t e = 0; e < q; ++e) {
          const Poly h = Poly::monomial(F, F.one(), e);
          EXPECT_EQ(mult_check(F, r, s, h).pp, oracle::bijective(tabulate(mult_poly(r, s, h))));
        }
        for (int t = 0; t < 50; ++t) {
          const Poly h = oracle::random_poly(F, rng, 1 + rng() % 4);
          EXPECT_EQ(mult_check(F, r, s, h).pp, oracle::bijective(tabulate(mult_poly(r, s, h))));
        }
      }
    }
  }
}
