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


#include "ffperm/serialize.hpp"

#include <stdexcept>
#include <string>

namespace ffperm {

namespace {

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing key '") + key + "'");
  }
  return j.at(key);
}

FieldElem elem_from_json(const Field& field, const Json& j, const char* what) {
  return field.elem(as_uint(j, what));
}

}  // namespace

Json field_to_json(const Field& field) {
  Json j;
  j["p"] = field.characteristic();
  j["m"] = field.degree();
  j["modulus"] = std::vector<std::uint32_t>(field.modulus().begin(), field.modulus().end());
  return j;
}

Field field_from_json(const Json& j, std::uint64_t max_cardinality) {
  const auto p = as_uint(member(j, "p"), "p");
  const auto m = as_uint(member(j, "m"), "m");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    modulus.emplace();
    for (const auto& c : j.at("modulus")) modulus->push_back(static_cast<std::uint32_t>(as_uint(c, "modulus")));
  }
  return Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), std::move(modulus),
                     max_cardinality);
}

Json encodings_to_json(std::span<const FieldElem> elems) {
  Json j = Json::array();
  for (const auto& e : elems) j.push_back(e.value);
  return j;
}

std::vector<FieldElem> encodings_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of element encodings");
  std::vector<FieldElem> out;
  for (const auto& e : j) out.push_back(elem_from_json(field, e, "element encoding"));
  return out;
}

Json poly_to_json(const Poly& f) {
  Json j;
  j["field"] = field_to_json(f.field());
  j["coeffs"] = encodings_to_json(f.coeffs());
  return j;
}

Poly poly_from_json(const Json& j, std::uint64_t max_cardinality) {
  const Field F = field_from_json(member(j, "field"), max_cardinality);
  return Poly(F, encodings_from_json(F, member(j, "coeffs")));
}

Json table_to_json(std::span<const FieldElem> table) { return encodings_to_json(table); }

ValueTable table_from_json(const Field& field, const Json& j) {
  ValueTable t = encodings_from_json(field, j);
  if (t.size() != field.cardinality()) {
    throw std::invalid_argument("value table has " + std::to_string(t.size()) +
                                " entries; expected " + std::to_string(field.cardinality()));
  }
  return t;
}

Json expr_to_json(const ExprTree& e) {
  switch (e.kind()) {
    case ExprTree::Kind::var: return Json::array({"var", e.var_index()});
    case ExprTree::Kind::constant: return Json::array({"const", e.constant_value().value});
    case ExprTree::Kind::pow:
      return Json::array({"pow", expr_to_json(e.children().front()), e.exponent()});
    case ExprTree::Kind::add:
    case ExprTree::Kind::mul: {
      Json j = Json::array({e.kind() == ExprTree::Kind::add ? "add" : "mul"});
      for (const auto& c : e.children()) j.push_back(expr_to_json(c));
      return j;
    }
  }
  throw std::logic_error("unknown expression kind");
}

ExprTree expr_from_json(const Field& field, const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_string()) {
    throw std::invalid_argument("expression must be an array headed by an operator name");
  }
  const std::string op = j[0].get<std::string>();
  if (op == "var" || op == "const" || op == "pow") {
    if (j.size() != (op == "pow" ? 3u : 2u)) {
      throw std::invalid_argument("wrong number of operands for '" + op + "'");
    }
  }
  if (op == "var") return ExprTree::var(as_uint(j[1], "variable index"));
  if (op == "const") return ExprTree::constant(elem_from_json(field, j[1], "constant"));
  if (op == "pow") return ExprTree::pow(expr_from_json(field, j[1]), as_uint(j[2], "exponent"));
  if (op == "add" || op == "mul") {
    std::vector<ExprTree> terms;
    for (std::size_t i = 1; i < j.size(); ++i) terms.push_back(expr_from_json(field, j[i]));
    return op == "add" ? ExprTree::add(std::move(terms)) : ExprTree::mul(std::move(terms));
  }
  throw std::invalid_argument("unknown expression operator '" + op + "'");
}

Json lin_to_json(const LinearizedPoly& L) {
  Json j;
  j["field"] = field_to_json(L.field());
  j["q"] = L.view().q();
  j["n"] = L.view().n();
  j["a"] = encodings_to_json(L.coeffs());
  return j;
}

namespace {

SubfieldView view_from_json(const Json& j, std::uint64_t max_cardinality) {
  const Field F = field_from_json(member(j, "field"), max_cardinality);
  const auto n = as_uint(member(j, "n"), "n");
  SubfieldView view(F, static_cast<unsigned>(n));
  if (view.q() != as_uint(member(j, "q"), "q")) {
    throw std::invalid_argument("q does not match the field and n");
  }
  return view;
}

}  // namespace

LinearizedPoly lin_from_json(const Json& j, std::uint64_t max_cardinality) {
  const SubfieldView view = view_from_json(j, max_cardinality);
  return LinearizedPoly(view, encodings_from_json(view.big(), member(j, "a")));
}

Json trace_form_to_json(const TraceForm& tf) {
  Json j = lin_to_json(from_trace_form(tf));
  j["theta"] = encodings_to_json(tf.theta);
  j["omega"] = encodings_to_json(tf.omega);
  return j;
}

TraceForm trace_form_from_json(const Json& j, std::uint64_t max_cardinality) {
  const SubfieldView view = view_from_json(j, max_cardinality);
  return {view, encodings_from_json(view.big(), member(j, "theta")),
          encodings_from_json(view.big(), member(j, "omega"))};
}

Json params_to_json(const FamilyParams& p) {
  Json j;
  j["q"] = p.view.q();
  j["variant"] = to_string(p.variant);
  j["a"] = p.a.value;
  j["u"] = p.u.value;
  j["v"] = p.v.value;
  j["c"] = p.c.value;
  j["b"] = encodings_to_json(p.b);
  return j;
}

FamilyParams params_from_json(const Json& j) {
  const SubfieldView view = SubfieldView::over(as_uint(member(j, "q"), "q"), 2);
  const Field& F = view.big();
  const Json& variant = member(j, "variant");
  if (!variant.is_string()) throw std::invalid_argument("variant must be a string");
  return {view,
          elem_from_json(F, member(j, "a"), "a"),
          elem_from_json(F, member(j, "u"), "u"),
          elem_from_json(F, member(j, "v"), "v"),
          elem_from_json(F, member(j, "c"), "c"),
          encodings_from_json(F, member(j, "b")),
          parse_variant(variant.get<std::string>())};
}

Json bigint_to_json(const BigInt& n) { return n.str(); }

Json report_to_json(const EnumerationReport& r) {
  Json j;
  j["q"] = r.q;
  j["variant"] = to_string(r.variant);
  j["candidates"] = r.candidates;
  j["tuples"] = r.tuples;
  if (r.dedupe) j["distinct"] = r.distinct;
  j["predicted"] = r.predicted;
  j["matches_total"] = r.matches_total;
  j["matches_per_a"] = r.matches_per_a;
  Json per_a = Json::object();
  for (const auto& [a, n] : r.per_a) per_a[std::to_string(a)] = n;
  j["per_a"] = per_a;
  if (r.dedupe) {
    Json per_a_distinct = Json::object();
    for (const auto& [a, n] : r.per_a_distinct) per_a_distinct[std::to_string(a)] = n;
    j["per_a_distinct"] = per_a_distinct;
  }
  j["ceiling"] = bigint_to_json(r.ceiling);
  j["all_pp"] = r.all_pp;
  j["all_inv_ok"] = r.all_inv_ok;
  j["all_identity_ok"] = r.all_identity_ok;
  Json failures = Json::array();
  for (const auto& p : r.failures) failures.push_back(params_to_json(p));
  j["failures"] = failures;
  return j;
}

}  // namespace ffperm
