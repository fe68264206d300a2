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

#ifndef FFPERM_FAMILY_HPP_
#define FFPERM_FAMILY_HPP_

// The permutation family f(x) = u x^q + v x + g(x^q + a x) over F_{q^2}, with
// g(x) = b_1 x + ... + b_{q-1} x^{q-1} and a^{q+1} = 1, together with its
// closed-form compositional inverses.
//
// Variant I requires
//   (a u + v^q + b_1^q a^{-1} + b_1 a,  u^q + a v + a (b_1^q a^{-1} + b_1 a)) = (c, a c)
//   b_i^q a^{-i} + b_i a = 0                                   (i = 2..q-1)
// and satisfies (x^q + a x) o f = c (x^q + a x).
//
// Variant II requires
//   (u + a v^q + b_1^q + b_1,  a u^q + v + a (b_1^q + b_1)) = (c, a c)
//   b_i^q a^{1-i} + b_i = 0                                    (i = 2..q-1)
// and satisfies (a x^q + x) o f = c (x^q + a x).
//
// Both need c in F_q^* and a u - v != 0.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffperm/fpoly.hpp"
#include "ffperm/gf.hpp"

namespace ffperm {

enum class Variant { I, II };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct FamilyParams {
  SubfieldView view;  // n = 2
  FieldElem a, u, v, c;
  std::vector<FieldElem> b;  // b_1 .. b_{q-1}
  Variant variant = Variant::II;
};

struct ParamFailure {
  std::string condition;
  std::string detail;
};

struct ParamVerdict {
  bool valid = false;
  std::vector<ParamFailure> failures;
};

// Sorted image of x -> x^q + a x. Post-asserts that it has q elements and
// equals {y : a y^q = y}; closure under F_q scaling is also checked.
std::vector<FieldElem> image_coset(FieldElem a, const SubfieldView& view);

// Number of roots of x^q + a x - d in F_{q^2}; post-asserts it is q exactly
// when a d^q = d and 0 otherwise.
std::uint64_t affine_root_count(FieldElem a, FieldElem d, const SubfieldView& view);

ParamVerdict validate_params(const FamilyParams& p);

// u x^q + v x + sum_i b_i (x^q + a x)^i. Post-asserts is_permutation and
// psi_1 o f = c (x^q + a x) pointwise.
Poly build_f(const FamilyParams& p);

// Closed-form inverse for the declared variant. Post-asserts equality with
// brute_inverse(build_f(p)).
Poly closed_inverse(const FamilyParams& p);

// (x^q + a x) for variant I, (a x^q + x) for variant II.
Poly psi1(const FamilyParams& p);

struct EnumerationReport {
  std::uint64_t q = 0;
  Variant variant = Variant::II;
  std::uint64_t candidates = 0;          // (a, u, v, c, b) tuples scanned, a^{q+1} = 1
  std::uint64_t tuples = 0;              // valid tuples
  std::uint64_t distinct = 0;            // distinct reduced f (when dedupe is set)
  bool dedupe = false;
  std::map<std::uint32_t, std::uint64_t> per_a;      // a encoding -> valid tuples
  std::map<std::uint32_t, std::uint64_t> per_a_distinct;
  std::uint64_t predicted = 0;           // q^{q+2} (q-1)^2
  bool matches_total = false;            // tuples == predicted
  bool matches_per_a = false;            // every per-a subtotal == predicted
  boost::multiprecision::cpp_int ceiling;  // (q!)^q
  bool all_pp = true;
  bool all_inv_ok = true;
  bool all_identity_ok = true;           // psi_1 o f = c (x^q + a x)
  std::vector<FamilyParams> failures;    // first few tuples failing any check
};

struct EnumerationOptions {
  bool dedupe = true;
  unsigned parallelism = 1;
  std::size_t max_failures_kept = 8;
};

inline constexpr std::uint64_t kMaxEnumerationQ = 4;

// Every tuple with a^{q+1} = 1 passing validate_params. Each f is checked for
// bijectivity against its closed-form inverse; the psi_1 identity is checked
// pointwise. q in {2,3,4}.
EnumerationReport enumerate_family(std::uint64_t q, Variant variant,
                                   const EnumerationOptions& options = {});

std::uint64_t predicted_family_count(std::uint64_t q);

enum class MultReason { ok, gcd_fails, h_vanishes_on_mu, not_permuting_mu };

std::string to_string(MultReason r);

struct MultVerdict {
  bool pp = false;
  MultReason reason = MultReason::ok;
  bool gcd_ok = false;
  bool permutes_mu = false;
  std::vector<FieldElem> mu;  // {x : x^{(Q-1)/s} = 1}
  std::optional<FieldElem> witness;  // element of mu where the condition fails
};

// x^r h(x^s) permutes F_Q iff gcd(r, s) = 1 and x^r h(x)^s permutes
// mu_{(Q-1)/s}. Post-asserts agreement with is_permutation. Throws
// std::invalid_argument when s does not divide Q - 1 or r, s are zero.
MultVerdict mult_check(const Field& field, std::uint64_t r, std::uint64_t s, const Poly& h);

// x^r h(x^s) as a reduced polynomial.
Poly mult_poly(std::uint64_t r, std::uint64_t s, const Poly& h);

}  // namespace ffperm

#endif  // FFPERM_FAMILY_HPP_
