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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ffperm/cli.hpp"
#include "ffperm/serialize.hpp"

using ffperm::Json;

namespace {

struct Result {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ffperm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyFrobenius) {
  const Result r = run({"pp", "verify", "--field", "2,2", "--poly", "0,0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["pp"], true);
  EXPECT_EQ(r.json()["schema"], 1);
}

TEST(Cli, NegativeVerdictCarriesReproducibleWitness) {
  const Result r = run({"pp", "verify", "--field", "2,2", "--poly", "0,0,0,1"});
  EXPECT_EQ(r.code, 1);
  const Json w = r.json()["witness"];
  const ffperm::Field F = ffperm::make_field(2, 2);
  const ffperm::Poly f = ffperm::Poly::from_encodings(F, std::vector<std::uint64_t>{0, 0, 0, 1});
  EXPECT_EQ(ffperm::eval(f, F.elem(w["x1"])), ffperm::eval(f, F.elem(w["x2"])));
  EXPECT_NE(w["x1"], w["x2"]);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"pp", "verify", "--field", "2,2", "--poly", "0,z"}).code, 2);
  EXPECT_EQ(run({"pp", "verify", "--field", "2,2", "--poly", "0,9"}).code, 2);
  EXPECT_EQ(run({"pp", "verify", "--field", "4,1", "--poly", "0,1"}).code, 2);
  EXPECT_EQ(run({"pp", "verify", "--field", "2,2"}).code, 2);
  EXPECT_EQ(run({"--max-q", "16", "pp", "verify", "--field", "2,5", "--poly", "0,1"}).code, 2);
  EXPECT_EQ(run({"--max-q", "2", "pp", "verify", "--field", "2,1", "--poly", "0,1"}).code, 2);
  EXPECT_EQ(run({"--parallelism", "0", "family", "enumerate", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"family", "enumerate", "--q", "5"}).code, 2);
  const Result r = run({"pp", "verify", "--field", "2,2", "--poly", "0,z"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("malformed"), std::string::npos);
}

TEST(Cli, EnvironmentBound) {
  ::setenv("FFPERM_MAX_Q", "8", 1);
  const Result a = run({"pp", "verify", "--field", "2,4", "--poly", "0,1"});
  const Result b = run({"--max-q", "16", "pp", "verify", "--field", "2,4", "--poly", "0,1"});
  ::unsetenv("FFPERM_MAX_Q");
  EXPECT_EQ(a.code, 2);
  EXPECT_EQ(b.code, 0);
}

TEST(Cli, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "ffperm_cli_config_test.json";
  std::ofstream(path) << R"({"format": "plain", "parallelism": 2})";
  const Result r = run({"--config", path.string(), "pp", "verify", "--field", "2,2", "--poly", "0,0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pp: true"), std::string::npos);
  std::ofstream(path) << R"({"colour": "blue"})";
  EXPECT_EQ(run({"--config", path.string(), "field", "show", "--p", "2", "--m", "2"}).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--config", path.string(), "field", "show", "--p", "2", "--m", "2"}).code, 2);
}

TEST(Cli, FieldShow) {
  const Result r = run({"field", "show", "--p", "3", "--m", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["field"]["modulus"].dump(), "[1,0,1]");
  EXPECT_EQ(r.json()["primitive_element"], 4);
}

TEST(Cli, InvertAndImage) {
  Result r = run({"pp", "invert", "--field", "2,2", "--poly", "0,2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["inverse"]["coeffs"].dump(), "[0,3]");
  r = run({"pp", "invert", "--field", "2,2", "--poly", "0,0,0,1"});
  EXPECT_EQ(r.code, 1);
  r = run({"pp", "image", "--field", "2,2", "--poly", "0,0,0,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["image"].dump(), "[0,1]");
}

TEST(Cli, LocalCertification) {
  Result r = run({"pp", "local", "--field", "2,2", "--poly", "0,0,1", "--phi", "0,1,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["psi"].dump(), "[0,0,1,1]");
  EXPECT_EQ(r.json()["compatible_bijections"], "4");
  r = run({"pp", "local", "--field", "2,2", "--poly", "0,0,0,1", "--phi", "0,1,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["reason"], "not_injective_on_fiber");
  EXPECT_EQ(r.json()["witness"]["x1"], 2);
  EXPECT_EQ(r.json()["witness"]["x2"], 3);
}

TEST(Cli, LocalInverse) {
  Result r = run({"pp", "local-inverse", "--field", "2,2", "--poly", "0,0,1", "--psi", "0,0,1,1;0,1,2,3",
                  "--combiner", R"(["add",["var",0],["var",1]])"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["inverse"]["coeffs"].dump(), "[0,0,1]");
  r = run({"pp", "local-inverse", "--field", "2,2", "--poly", "0,2", "--psi", "0,1,2,3", "--combiner",
           R"(["var",0])"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.json()["witness"].contains("x"));
  EXPECT_EQ(run({"pp", "local-inverse", "--field", "2,2", "--poly", "0,2", "--psi", "0,1,2,3",
                 "--combiner", "[oops"}).code, 2);
}

TEST(Cli, FamilyCommands) {
  Result r = run({"family", "enumerate", "--q", "2", "--variant", "II"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["predicted"], 16);
  EXPECT_TRUE(r.json()["all_pp"].get<bool>());
  EXPECT_TRUE(r.json()["all_inv_ok"].get<bool>());
  EXPECT_EQ(r.json()["per_a"].size(), 3u);

  r = run({"family", "validate", "--q", "2", "--a", "1", "--u", "1", "--v", "2", "--c", "1", "--b", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["witness"]["v"], 2);
  r = run({"family", "build", "--q", "3", "--a", "1", "--u", "1", "--v", "0", "--c", "2", "--b", "2,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["f"]["coeffs"].dump(), "[0,2]");
  r = run({"family", "invert", "--q", "2", "--a", "1", "--u", "1", "--v", "0", "--c", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["inverse"]["coeffs"].dump(), "[0,0,1]");
  EXPECT_EQ(run({"family", "build", "--q", "2", "--variant", "III", "--a", "1", "--u", "1", "--v", "0",
                 "--c", "1"}).code, 2);
}

TEST(Cli, LinearizedCommands) {
  Result r = run({"lin", "criteria", "--q", "2", "--n", "2", "--coeffs", "0,1"});
  ASSERT_EQ(r.code, 0);
  for (const auto& [k, v] : r.json()["verdicts"].items()) EXPECT_TRUE(v.get<bool>()) << k;
  EXPECT_TRUE(r.json()["agree"].get<bool>());

  r = run({"lin", "criteria", "--q", "2", "--n", "2", "--coeffs", "2,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.json()["agree"].get<bool>());
  EXPECT_EQ(r.json()["witness"]["trace_u"], 2);

  r = run({"lin", "invert", "--q", "2", "--n", "2", "--coeffs", "2,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["inverse"]["a"].dump(), "[3,0]");
  r = run({"lin", "invert", "--q", "2", "--n", "2", "--coeffs", "1,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["witness"]["kernel"], 1);

  r = run({"lin", "trace-form", "--q", "2", "--n", "2", "--coeffs", "1,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["trace_form"]["omega"].dump(), "[3,1]");

  r = run({"lin", "degenerate", "--q", "2", "--n", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["omega"], 3);
  EXPECT_EQ(r.json()["image_size"], 2);
  EXPECT_TRUE(r.json()["audit_flags_counterexample"].get<bool>());
  EXPECT_EQ(run({"lin", "degenerate", "--q", "3", "--n", "1"}).code, 2);

  r = run({"lin", "min-witness", "--q", "2", "--n", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["size"], 3);
  EXPECT_EQ(r.json()["witnesses"].dump(), "[1,2,3]");
  EXPECT_EQ(run({"lin", "invert", "--q", "2", "--n", "2", "--coeffs", "1"}).code, 2);
}

TEST(Cli, MultCheck) {
  EXPECT_EQ(run({"mult", "check", "--q", "7", "--r", "5", "--s", "3", "--h", "1"}).code, 0);
  const Result r = run({"mult", "check", "--q", "7", "--r", "2", "--s", "3", "--h", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["reason"], "not_permuting_mu");
  EXPECT_TRUE(r.json()["witness"].contains("x1"));
  EXPECT_EQ(run({"mult", "check", "--q", "7", "--r", "1", "--s", "4", "--h", "1"}).code, 2);
}

TEST(Cli, SboxExport) {
  Result r = run({"export", "sbox", "--field", "2,2", "--poly", "0,0,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "const unsigned sbox[4] = {0, 1, 3, 2};\n");
  r = run({"export", "sbox", "--field", "2,2", "--poly", "0,0,1", "--format", "csv"});
  EXPECT_EQ(r.out, "x,f(x)\n0,0\n1,1\n2,3\n3,2\n");
  EXPECT_EQ(run({"export", "sbox", "--field", "2,2", "--poly", "0,0,0,1"}).code, 1);
  EXPECT_EQ(run({"export", "sbox", "--field", "2,2", "--poly", "0,1", "--format", "xml"}).code, 2);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> a{"--seed", "7", "pp", "random", "--field", "2,4"};
  const Result x = run(a), y = run(a);
  ASSERT_EQ(x.code, 0);
  EXPECT_EQ(x.out, y.out);
  EXPECT_NE(x.out, run({"--seed", "8", "pp", "random", "--field", "2,4"}).out);
  const std::vector<std::string> e1{"--parallelism", "1", "family", "enumerate", "--q", "3"};
  const std::vector<std::string> e4{"--parallelism", "4", "family", "enumerate", "--q", "3"};
  EXPECT_EQ(run(e1).out, run(e4).out);
  const Json rnd = x.json();
  EXPECT_EQ(run({"pp", "verify", "--field", "2,4", "--poly", [&] {
                   std::string s;
                   for (const auto& c : rnd["poly"]["coeffs"]) s += (s.empty() ? "" : ",") + c.dump();
                   return s;
                 }()}).code, 0);
}

TEST(Cli, OutputFormats) {
  Result r = run({"--output", "csv", "pp", "verify", "--field", "2,2", "--poly", "0,0,1"});
  EXPECT_EQ(r.out, "key,value\nschema,1\ncommand,pp verify\npp,true\n");
  r = run({"pp", "verify", "--field", "2,2", "--poly", "0,0,1", "--output", "plain"});
  EXPECT_EQ(r.out, "schema: 1\ncommand: pp verify\npp: true\n");
  EXPECT_EQ(run({"--output", "yaml", "pp", "verify", "--field", "2,2", "--poly", "0,1"}).code, 2);
}

TEST(Cli, Help) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("family"), std::string::npos);
}
