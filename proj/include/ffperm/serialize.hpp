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


#ifndef FFPERM_SERIALIZE_HPP_
#define FFPERM_SERIALIZE_HPP_

// JSON encodings shared by the library and the command-line tool. Elements
// are written as integer encodings, polynomials constant-term first.

#include <cstdint>
#include <span>

#include "json.hpp"

#include "ffperm/expr.hpp"
#include "ffperm/family.hpp"
#include "ffperm/fpoly.hpp"
#include "ffperm/gf.hpp"
#include "ffperm/linearized.hpp"
#include "ffperm/permtool.hpp"

namespace ffperm {

using Json = nlohmann::ordered_json;

// {"p": int, "m": int, "modulus": [int, ...]}
Json field_to_json(const Field& field);
Field field_from_json(const Json& j, std::uint64_t max_cardinality = kDefaultMaxCardinality);

// {"field": ..., "coeffs": [int, ...]}
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j, std::uint64_t max_cardinality = kDefaultMaxCardinality);

Json encodings_to_json(std::span<const FieldElem> elems);
std::vector<FieldElem> encodings_from_json(const Field& field, const Json& j);

// Integer array of length Q.
Json table_to_json(std::span<const FieldElem> table);
ValueTable table_from_json(const Field& field, const Json& j);

// ["add", ["var", 0], ["pow", ["var", 1], 2]], ["const", e], ["mul", ...]
Json expr_to_json(const ExprTree& e);
ExprTree expr_from_json(const Field& field, const Json& j);

// {"field": ..., "q": int, "n": int, "a": [int, ...]}
Json lin_to_json(const LinearizedPoly& L);
LinearizedPoly lin_from_json(const Json& j, std::uint64_t max_cardinality = kDefaultMaxCardinality);

// Linearized fields plus "theta" and "omega".
Json trace_form_to_json(const TraceForm& tf);
TraceForm trace_form_from_json(const Json& j,
                               std::uint64_t max_cardinality = kDefaultMaxCardinality);

// {"q", "variant", "a", "u", "v", "c", "b"}
Json params_to_json(const FamilyParams& p);
FamilyParams params_from_json(const Json& j);

Json report_to_json(const EnumerationReport& r);

// Arbitrary-precision integers are written as decimal strings.
Json bigint_to_json(const BigInt& n);

}  // namespace ffperm

#endif  // FFPERM_SERIALIZE_HPP_
