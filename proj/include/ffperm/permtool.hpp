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

#ifndef FFPERM_PERMTOOL_HPP_
#define FFPERM_PERMTOOL_HPP_

// Permutation certification and inversion over GF(Q).
//
// Brute-force oracles (is_permutation, brute_inverse, image) sit next to the
// fiber-based local criterion: given a surjection phi: F_Q -> S, f is
// bijective iff f is injective on every fiber phi^{-1}(s) and the fiber images
// f(phi^{-1}(s)) tile F_Q. When they do, psi(y) = s on f(phi^{-1}(s)) is the
// unique surjection with psi o f = phi, and exactly prod_s |phi^{-1}(s)|!
// bijections are compatible with a given (phi, psi).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffperm/expr.hpp"
#include "ffperm/fpoly.hpp"
#include "ffperm/gf.hpp"

namespace ffperm {

using BigInt = boost::multiprecision::cpp_int;

// An invalid_argument carrying the element that violates a precondition.
class WitnessError : public std::invalid_argument {
 public:
  WitnessError(const std::string& what, FieldElem witness)
      : std::invalid_argument(what), witness_(witness) {}
  FieldElem witness() const { return witness_; }

 private:
  FieldElem witness_;
};

bool is_permutation(const Poly& f);
bool is_permutation(std::span<const FieldElem> table);

// Throws WitnessError (witness = a value hit twice) when f is not a PP.
Poly brute_inverse(const Poly& f);

// Sorted image of f.
std::vector<FieldElem> image(const Poly& f);
std::vector<FieldElem> image(std::span<const FieldElem> table);

// True when the table's image is exactly `target` (sorted).
bool surjective_onto(std::span<const FieldElem> table, std::span<const FieldElem> target);

// psi o f as a table: psi[f(x)] for every x.
ValueTable compose_tables(std::span<const FieldElem> psi, std::span<const FieldElem> f);

struct Fibers {
  std::vector<FieldElem> image;                    // S, sorted
  std::vector<std::vector<FieldElem>> members;     // members[i] = phi^{-1}(image[i])
};

Fibers fibers_of(std::span<const FieldElem> phi);

struct LocalDecomposition {
  ValueTable phi;
  ValueTable psi;
  std::vector<FieldElem> image;
  std::vector<std::vector<FieldElem>> fibers;
};

enum class LocalFailure {
  none,
  not_injective_on_fiber,  // f(x1) == f(x2) inside one fiber
  fiber_images_overlap,    // two fibers share an image point
  fiber_images_not_covering,
};

struct LocalVerdict {
  bool bijective = false;
  LocalFailure reason = LocalFailure::none;
  // The first violating pair (x1 < x2 by encoding) with f(x1) == f(x2).
  std::optional<std::pair<FieldElem, FieldElem>> witness;
  std::vector<FieldElem> image;
  std::vector<std::vector<FieldElem>> fibers;
};

std::string to_string(LocalFailure reason);

LocalVerdict local_certify(const Poly& f, const Poly& phi);
LocalVerdict local_certify(std::span<const FieldElem> f, std::span<const FieldElem> phi);

// The unique surjection psi with psi o f = phi; throws std::invalid_argument
// when local certification fails.
ValueTable induced_psi(const Poly& f, const Poly& phi);
ValueTable induced_psi(std::span<const FieldElem> f, std::span<const FieldElem> phi);

LocalDecomposition local_decomposition(const Poly& f, const Poly& phi);

// prod_s |phi^{-1}(s)|! when phi and psi have the same image and matching fiber
// sizes, else 0.
BigInt count_compatible_bijections(std::span<const FieldElem> phi,
                                   std::span<const FieldElem> psi);

// f^{-1} = F(psi_1, ..., psi_t), given that F(phi_1(x), ..., phi_t(x)) = x with
// phi_i = psi_i o f. The identity is checked at every x (WitnessError on the
// first failing x) and the result is checked against brute_inverse.
Poly local_inverse(const Poly& f, std::span<const ValueTable> psis, const ExprTree& combiner);

// Instance check of the composition statement: for a permutation g, g o f is
// a PP iff every psi_i o g^{-1} is surjective onto Im(psi_i), under the
// hypothesis that f is a PP iff every psi_i o f is surjective.
struct CompositionReport {
  bool f_is_pp = false;
  std::vector<bool> psi_f_surjective;        // psi_i o f onto Im(psi_i)
  bool hypothesis_holds = false;             // f_is_pp == all(psi_f_surjective)
  std::vector<bool> psi_ginv_surjective;     // psi_i o g^{-1} onto Im(psi_i)
  bool gf_is_pp = false;
  bool biconditional_holds = false;          // gf_is_pp == all(psi_ginv_surjective)
  bool consistent = false;                   // hypothesis_holds implies biconditional_holds
  std::string note;
};

CompositionReport composition_harness(const Poly& f, const Poly& g,
                                    std::span<const ValueTable> psis);

struct AuditCounterexample {
  std::size_t candidate_index = 0;
  Poly f;
  bool all_surjective = false;
  bool is_pp = false;
};

struct AuditResult {
  std::vector<AuditCounterexample> counterexamples;  // in candidate order
  std::vector<std::string> warnings;
  std::size_t examined = 0;
};

struct AuditOptions {
  bool warn_on_large_image = true;  // |S_i| > Q/2
  unsigned parallelism = 1;
};

// Every candidate f on which [all psi_i o f surjective] disagrees with
// is_permutation(f).
AuditResult local_pp_audit(std::span<const ValueTable> psis, std::span<const Poly> candidates,
                           const AuditOptions& options = {});

}  // namespace ffperm

#endif  // FFPERM_PERMTOOL_HPP_
