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

#ifndef FFPERM_LINEARIZED_HPP_
#define FFPERM_LINEARIZED_HPP_

// Linearized polynomials L(x) = sum_{i<n} a_i x^{q^i} over F_{q^n}.
//
// The coefficient vector converts to the Dickson matrix D_L, whose (i, j)
// entry is a_{(j-i) mod n}^{q^i}. It also converts to the trace form
// L(x) = sum_i Tr(theta_i x) omega_i for a basis theta.
//
// Permutation criteria provided here, all mutually cross-checked in tests:
//   - det D_L != 0
//   - {omega_i} is a basis (pp_by_basis)
//   - det (Tr(theta_i omega_j)) != 0 (d1_check)
//   - sum_i Tr(omega_i u) theta_i != 0 for every u != 0 (trace_criterion)

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffperm/fpoly.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/matrix.hpp"

namespace ffperm {

// Maps up to this cardinality get brute-force cross-checks on every call.
inline constexpr std::uint64_t kDeskScale = 4096;

class LinearizedPoly {
 public:
  LinearizedPoly(SubfieldView view, std::vector<FieldElem> coeffs);

  const SubfieldView& view() const { return view_; }
  const Field& field() const { return view_.big(); }
  std::span<const FieldElem> coeffs() const { return a_; }
  FieldElem coeff(std::size_t i) const { return a_[i]; }
  std::size_t n() const { return a_.size(); }

  // As an ordinary reduced polynomial over F_{q^n}.
  Poly to_poly() const;

  friend bool operator==(const LinearizedPoly& x, const LinearizedPoly& y) {
    return x.field() == y.field() && x.view_.n() == y.view_.n() && x.a_ == y.a_;
  }

 private:
  SubfieldView view_;
  std::vector<FieldElem> a_;
};

struct TraceForm {
  SubfieldView view;
  std::vector<FieldElem> theta;
  std::vector<FieldElem> omega;
};

FieldElem eval_lin(const LinearizedPoly& L, FieldElem x);
ValueTable tabulate(const LinearizedPoly& L);

Matrix dickson(const LinearizedPoly& L);

// Throws std::logic_error when a Dickson matrix fails the row-shift structure.
void check_dickson_structure(const Matrix& m, const SubfieldView& view);

struct DetCofactors {
  FieldElem determinant;
  std::vector<FieldElem> cofactors;  // (i, 0) cofactors, i = 0..n-1
};

// Determinant by elimination and column-0 cofactors by minors. Asserts the
// expansion det = sum_i a_{(n-i) mod n}^{q^i} cofactor_i on every call.
DetCofactors det_and_cofactors(const Matrix& dickson_matrix, const SubfieldView& view);

// L^{-1}(x) = det^{-1} sum_i cofactor_i x^{q^i}. Throws std::domain_error when
// D_L is singular. Cross-checked against row 0 of D_L^{-1} and, at desk scale,
// against brute_inverse.
LinearizedPoly cofactor_inverse(const LinearizedPoly& L);

// a_k = sum_i omega_i theta_i^{q^k}.
LinearizedPoly from_trace_form(const TraceForm& tf);

// omega_j = L(theta*_j) for the dual basis theta*.
TraceForm to_trace_form(const LinearizedPoly& L, std::span<const FieldElem> theta);

bool pp_by_basis(const TraceForm& tf);

struct D1Result {
  Matrix d1;  // (i, j) entry Tr(theta_i omega_j)
  FieldElem determinant;
  bool pp = false;
  std::vector<FieldElem> eta;  // eta_i = sum_j theta_j Tr(theta_i omega_j)
};

// Also asserts Tr(theta_i L(x)) == Tr(eta_i x) for every i and x at desk scale.
D1Result d1_check(const TraceForm& tf);

struct TraceCriterionResult {
  bool pp = false;
  std::optional<FieldElem> witness;  // smallest u != 0 with Tr(u x) o L == 0
  std::size_t cross_checked = 0;     // u values verified by literal composition
};

TraceCriterionResult trace_criterion(const LinearizedPoly& L, std::span<const FieldElem> theta);

struct BasisTraceResult {
  bool basis = false;
  std::optional<FieldElem> killer;  // smallest u != 0 with Tr(u omega_i) = 0 for all i
};

// Asserts agreement with is_basis on every call.
BasisTraceResult basis_trace_test(std::span<const FieldElem> omega, const SubfieldView& view);

struct DegenerateMap {
  LinearizedPoly L;
  FieldElem omega;
  std::vector<FieldElem> image;
  std::vector<FieldElem> dual_v;  // e_j, the functionals Tr(e_j x) that fail to certify L
};

// L(x) = omega sum_i Tr(theta_i x) with omega = sum_j a_j v_j. Post-asserts
// |Im L| = q while every Tr(e_j x) o L is still onto F_q. Throws
// std::invalid_argument for n = 1 or when an input is not a basis or has a
// coefficient outside F_q^*.
DegenerateMap degenerate_L(std::span<const FieldElem> theta, std::span<const FieldElem> v,
                           std::span<const FieldElem> a_coeffs, const SubfieldView& view);

// Every coefficient vector over F_{q^n}, in lexicographic encoding order with
// a_0 varying fastest.
std::vector<LinearizedPoly> all_linearized(const SubfieldView& view);

struct MinWitness {
  std::size_t size = 0;
  std::vector<FieldElem> witnesses;
  std::size_t non_pp_maps = 0;
};

// Smallest B in F_{q^n}^* such that every non-PP linearized map is annihilated
// (Tr(beta x) o L == 0) by some beta in B. Only for q^n <= 16.
MinWitness min_trace_witness(const SubfieldView& view);

inline constexpr std::uint64_t kMinWitnessMaxCardinality = 16;

}  // namespace ffperm

#endif  // FFPERM_LINEARIZED_HPP_
