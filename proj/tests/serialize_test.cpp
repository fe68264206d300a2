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

#include "ffperm/serialize.hpp"

using namespace ffperm;

TEST(Serialize, FieldDescription) {
  const Field F = make_field(3, 2);
  const Json j = field_to_json(F);
  EXPECT_EQ(j.dump(), R"({"p":3,"m":2,"modulus":[1,0,1]})");
  EXPECT_TRUE(field_from_json(j) == F);
  EXPECT_THROW(field_from_json(Json::parse(R"({"p":4,"m":1})")), std::invalid_argument);
  EXPECT_THROW(field_from_json(Json::parse(R"({"p":2})")), std::invalid_argument);
}

TEST(Serialize, PolyRoundTrip) {
  const Field F = make_field(2, 2);
  const Poly f = Poly::from_encodings(F, std::vector<std::uint64_t>{2, 0, 1});
  const Json j = poly_to_json(f);
  EXPECT_EQ(j["coeffs"].dump(), "[2,0,1]");
  EXPECT_EQ(poly_from_json(j), f);
  Json bad = j;
  bad["coeffs"] = Json::array({7});
  EXPECT_THROW(poly_from_json(bad), std::out_of_range);
}

TEST(Serialize, TablesAndExpressions) {
  const Field F = make_field(2, 2);
  const ValueTable t = F.elements();
  EXPECT_EQ(table_to_json(t).dump(), "[0,1,2,3]");
  EXPECT_EQ(table_from_json(F, table_to_json(t)), t);
  EXPECT_THROW(table_from_json(F, Json::parse("[0,1]")), std::invalid_argument);

  const Json e = Json::parse(R"(["add",["var",0],["pow",["var",1],2]])");
  const ExprTree tree = expr_from_json(F, e);
  EXPECT_EQ(expr_to_json(tree), e);
  EXPECT_EQ(tree.arity(), 2u);
  const Json c = Json::parse(R"(["mul",["const",3],["var",0]])");
  EXPECT_EQ(expr_to_json(expr_from_json(F, c)), c);
  EXPECT_THROW(expr_from_json(F, Json::parse(R"(["div",["var",0]])")), std::invalid_argument);
  EXPECT_THROW(expr_from_json(F, Json::parse(R"(["pow",["var",0]])")), std::invalid_argument);
}

TEST(Serialize, LinearizedAndTraceForm) {
  const SubfieldView view = SubfieldView::over(2, 2);
  const Field& F = view.big();
  const LinearizedPoly L(view, {F.zero(), F.one()});
  const Json j = lin_to_json(L);
  EXPECT_EQ(j["q"], 2);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["a"].dump(), "[0,1]");
  EXPECT_EQ(lin_from_json(j), L);
  const TraceForm tf = to_trace_form(L, canonical_basis(view));
  const Json jt = trace_form_to_json(tf);
  EXPECT_EQ(jt["theta"].dump(), "[1,2]");
  EXPECT_EQ(jt["omega"].dump(), "[2,1]");
  const TraceForm back = trace_form_from_json(jt);
  EXPECT_EQ(back.omega, tf.omega);
  Json wrong = j;
  wrong["q"] = 4;
  EXPECT_THROW(lin_from_json(wrong), std::invalid_argument);
}

TEST(Serialize, FamilyParamsAndReport) {
  const Json j = Json::parse(R"({"q":3,"variant":"II","a":1,"u":1,"v":0,"c":2,"b":[2,0]})");
  const FamilyParams p = params_from_json(j);
  EXPECT_EQ(params_to_json(p), j);
  EXPECT_TRUE(validate_params(p).valid);
  const Json r = report_to_json(enumerate_family(2, Variant::II));
  for (const char* key : {"tuples", "distinct", "predicted", "per_a", "all_pp", "all_inv_ok"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_EQ(r["predicted"], 16);
  EXPECT_EQ(r["ceiling"], "4");
  EXPECT_EQ(bigint_to_json(BigInt(1) << 100), "1267650600228229401496703205376");
}
