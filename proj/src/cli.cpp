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


#include "ffperm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "ffperm/family.hpp"
#include "ffperm/fpoly.hpp"
#include "ffperm/linearized.hpp"
#include "ffperm/permtool.hpp"
#include "ffperm/serialize.hpp"

namespace ffperm::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Result of one subcommand. `raw`, when set, replaces the structured payload
// (used by the lookup-table export).
struct Outcome {
  explicit Outcome(Json p) : payload(std::move(p)) {}
  Json payload;
  int code = kExitOk;
  std::optional<std::string> raw;
};

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok(text.data() + pos,
                               (comma == std::string::npos ? text.size() : comma) - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw UsageError("malformed " + what + ": '" + std::string(tok) + "' in '" + text + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<FieldElem> parse_elems(const Field& F, const std::string& text, const std::string& what) {
  std::vector<FieldElem> out;
  for (auto v : parse_list(text, what)) {
    if (v >= F.cardinality()) {
      throw UsageError(what + " encoding " + std::to_string(v) + " is not an element of " +
                       F.describe());
    }
    out.push_back(F.elem(v));
  }
  return out;
}

FieldElem parse_elem(const Field& F, std::uint64_t v, const std::string& what) {
  if (v >= F.cardinality()) {
    throw UsageError(what + " = " + std::to_string(v) + " is not an element of " + F.describe());
  }
  return F.elem(v);
}

Field parse_field(const std::string& text, const CliConfig& cfg) {
  const auto pm = parse_list(text, "field (expected p,m)");
  if (pm.size() != 2) throw UsageError("--field expects p,m; got '" + text + "'");
  return make_field(static_cast<std::uint32_t>(pm[0]), static_cast<unsigned>(pm[1]), {},
                    cfg.max_cardinality);
}

Field field_of_order(std::uint64_t q, const CliConfig& cfg) {
  const auto pm = prime_power(q);
  if (!pm) throw UsageError(std::to_string(q) + " is not a prime power");
  return make_field(pm->first, pm->second, {}, cfg.max_cardinality);
}

Poly parse_poly(const Field& F, const std::string& text) {
  return Poly(F, parse_elems(F, text, "polynomial coefficient"));
}

ValueTable parse_table(const Field& F, const std::string& text) {
  ValueTable t = parse_elems(F, text, "table entry");
  if (t.size() != F.cardinality()) {
    throw UsageError("value table has " + std::to_string(t.size()) + " entries; expected " +
                     std::to_string(F.cardinality()));
  }
  return t;
}

// The first x2 (in encoding order) whose value was already taken by some
// x1 < x2, and the smallest value left uncovered.
Json collision_witness(std::span<const FieldElem> table) {
  std::vector<std::int64_t> first(table.size(), -1);
  Json w;
  for (std::size_t x = 0; x < table.size(); ++x) {
    auto& slot = first[table[x].value];
    if (slot >= 0) {
      w["x1"] = slot;
      w["x2"] = x;
      w["value"] = table[x].value;
      break;
    }
    slot = static_cast<std::int64_t>(x);
  }
  for (std::size_t y = 0; y < table.size(); ++y) {
    if (first[y] < 0) {
      bool hit = false;
      for (const auto& v : table) hit = hit || v.value == y;
      if (!hit) {
        w["missing"] = y;
        break;
      }
    }
  }
  return w;
}

std::optional<FieldElem> kernel_element(std::span<const FieldElem> table, const Field& F) {
  for (std::size_t x = 1; x < table.size(); ++x) {
    if (table[x].is_zero()) return F.elem(x);
  }
  return std::nullopt;
}

Json json_or_null(const std::optional<FieldElem>& x) {
  return x ? Json(x->value) : Json(nullptr);
}

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void emit(const Json& payload, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json: out << payload.dump(2) << '\n'; return;
    case OutputFormat::plain:
      for (const auto& [k, v] : payload.items()) {
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      return;
    case OutputFormat::csv:
      out << "key,value\n";
      for (const auto& [k, v] : payload.items()) out << k << ',' << csv_cell(v) << '\n';
      return;
  }
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "plain") return OutputFormat::plain;
  throw UsageError("output format must be json, csv or plain; got '" + s + "'");
}

void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto uint_key = [&](const char* key) -> std::optional<std::uint64_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_unsigned()) throw UsageError(std::string("config: ") + key + " must be a non-negative integer");
    return j[key].get<std::uint64_t>();
  };
  for (const auto& [k, v] : j.items()) {
    if (k != "max_cardinality" && k != "format" && k != "parallelism" && k != "seed") {
      throw UsageError("config: unknown key '" + k + "'");
    }
  }
  if (auto v = uint_key("max_cardinality")) cfg.max_cardinality = *v;
  if (auto v = uint_key("parallelism")) cfg.parallelism = static_cast<unsigned>(*v);
  if (auto v = uint_key("seed")) cfg.seed = *v;
  if (j.contains("format")) {
    if (!j["format"].is_string()) throw UsageError("config: format must be a string");
    cfg.format = parse_format(j["format"].get<std::string>());
  }
}

void validate_config(const CliConfig& cfg) {
  if (cfg.max_cardinality < 4) throw UsageError("cardinality bound must be at least 4");
  if (cfg.max_cardinality > kHardMaxCardinality) {
    throw UsageError("cardinality bound exceeds the hard limit " + std::to_string(kHardMaxCardinality));
  }
  if (cfg.parallelism < 1) throw UsageError("parallelism must be at least 1");
}

// All option values, bound by CLI11 and read by the handlers.
struct Args {
  std::string config_path, output, field, poly, phi, combiner, coeffs, theta, vbasis, acoeffs,
      h, b, modulus, variant = "II", sbox_format = "c-array";
  std::vector<std::string> psi;
  std::uint64_t max_q = 0, parallelism = 0, seed = 0, p = 0, m = 0, q = 0, n = 0, r = 0, s = 0;
  std::uint64_t a = 0, u = 0, v = 0, c = 0;
  bool no_dedupe = false;
};

Json base_payload(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

// ---- field ----

Outcome field_show(const Args& args, const CliConfig& cfg) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!args.modulus.empty()) {
    modulus.emplace();
    for (auto c : parse_list(args.modulus, "modulus coefficient")) {
      modulus->push_back(static_cast<std::uint32_t>(c));
    }
  }
  const Field F = make_field(static_cast<std::uint32_t>(args.p), static_cast<unsigned>(args.m),
                             modulus, cfg.max_cardinality);
  Outcome o{base_payload("field show")};
  o.payload["field"] = field_to_json(F);
  o.payload["cardinality"] = F.cardinality();
  o.payload["primitive_element"] = F.primitive_element().value;
  return o;
}

// ---- pp ----

Outcome pp_verify(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("pp verify");
  const Poly f = parse_poly(F, args.poly);
  const ValueTable t = tabulate(f);
  Outcome o{base_payload("pp verify")};
  const bool pp = is_permutation(t);
  o.payload["pp"] = pp;
  if (!pp) {
    o.payload["witness"] = collision_witness(t);
    o.code = kExitNegative;
  }
  return o;
}

Outcome pp_invert(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("pp invert");
  const Poly f = parse_poly(F, args.poly);
  Outcome o{base_payload("pp invert")};
  const ValueTable t = tabulate(f);
  if (!is_permutation(t)) {
    o.payload["pp"] = false;
    o.payload["witness"] = collision_witness(t);
    o.code = kExitNegative;
    return o;
  }
  o.payload["pp"] = true;
  o.payload["inverse"] = poly_to_json(brute_inverse(f));
  return o;
}

Outcome pp_image(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("pp image");
  const auto im = image(parse_poly(F, args.poly));
  Outcome o{base_payload("pp image")};
  o.payload["size"] = im.size();
  o.payload["image"] = encodings_to_json(im);
  return o;
}

Outcome pp_local(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("pp local");
  const ValueTable f = tabulate(parse_poly(F, args.poly));
  const ValueTable phi = tabulate(parse_poly(F, args.phi));
  const LocalVerdict v = local_certify(f, phi);
  Outcome o{base_payload("pp local")};
  o.payload["bijective"] = v.bijective;
  o.payload["reason"] = to_string(v.reason);
  Json fibers = Json::array();
  for (std::size_t i = 0; i < v.image.size(); ++i) {
    Json fib;
    fib["s"] = v.image[i].value;
    fib["members"] = encodings_to_json(v.fibers[i]);
    fibers.push_back(fib);
  }
  o.payload["fibers"] = fibers;
  if (!v.bijective) {
    Json w = collision_witness(f);
    if (v.witness) {
      w["x1"] = v.witness->first.value;
      w["x2"] = v.witness->second.value;
      w["value"] = f[v.witness->first.value].value;
    }
    o.payload["witness"] = w;
    o.code = kExitNegative;
    return o;
  }
  const ValueTable psi = induced_psi(f, phi);
  o.payload["psi"] = table_to_json(psi);
  o.payload["psi_poly"] = encodings_to_json(interpolate(F, psi).coeffs());
  o.payload["compatible_bijections"] = bigint_to_json(count_compatible_bijections(phi, psi));
  return o;
}

Outcome pp_local_inverse(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("pp local-inverse");
  const Poly f = parse_poly(F, args.poly);
  std::vector<ValueTable> psis;
  for (const auto& arg : args.psi) {
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      const std::size_t semi = arg.find(';', pos);
      const std::string part = arg.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
      psis.push_back(parse_table(F, part));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  }
  Json expr;
  try {
    expr = Json::parse(args.combiner);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("--combiner is not a JSON expression: ") + e.what());
  }
  const ExprTree combiner = expr_from_json(F, expr);
  Outcome o{base_payload("pp local-inverse")};
  const ValueTable t = tabulate(f);
  if (!is_permutation(t)) {
    o.payload["pp"] = false;
    o.payload["witness"] = collision_witness(t);
    o.code = kExitNegative;
    return o;
  }
  try {
    o.payload["inverse"] = poly_to_json(local_inverse(f, psis, combiner));
    o.payload["combiner"] = expr_to_json(combiner);
  } catch (const WitnessError& e) {
    o.payload["error"] = e.what();
    o.payload["witness"] = Json{{"x", e.witness().value}};
    o.code = kExitNegative;
  }
  return o;
}

Outcome pp_random(const Args&, const CliConfig&);

// ---- family ----

FamilyParams params_from_args(const Args& args, const CliConfig& cfg) {
  const SubfieldView view = SubfieldView::over(args.q, 2, cfg.max_cardinality);
  const Field& F = view.big();
  std::vector<FieldElem> b = parse_elems(F, args.b, "b coefficient");
  if (args.b.empty()) b.assign(args.q - 1, F.zero());
  return {view,
          parse_elem(F, args.a, "a"),
          parse_elem(F, args.u, "u"),
          parse_elem(F, args.v, "v"),
          parse_elem(F, args.c, "c"),
          std::move(b),
          parse_variant(args.variant)};
}

Outcome family_validate(const Args& args, const CliConfig& cfg) {
  const FamilyParams p = params_from_args(args, cfg);
  const ParamVerdict v = validate_params(p);
  Outcome o{base_payload("family validate")};
  o.payload["valid"] = v.valid;
  o.payload["params"] = params_to_json(p);
  Json failures = Json::array();
  for (const auto& f : v.failures) failures.push_back({{"condition", f.condition}, {"detail", f.detail}});
  o.payload["failures"] = failures;
  if (!v.valid) {
    o.payload["witness"] = params_to_json(p);
    o.code = kExitNegative;
  }
  return o;
}

Outcome family_build_or_invert(const Args& args, const CliConfig& cfg, bool invert) {
  const FamilyParams p = params_from_args(args, cfg);
  const std::string command = invert ? "family invert" : "family build";
  p.view.big().require_exhaustive(command.c_str());
  const ParamVerdict v = validate_params(p);
  Outcome o{base_payload(command)};
  o.payload["params"] = params_to_json(p);
  if (!v.valid) {
    o.payload["valid"] = false;
    o.payload["failed_condition"] = v.failures.front().condition;
    o.payload["detail"] = v.failures.front().detail;
    o.payload["witness"] = params_to_json(p);
    o.code = kExitNegative;
    return o;
  }
  o.payload["valid"] = true;
  o.payload["f"] = poly_to_json(build_f(p));
  if (invert) o.payload["inverse"] = poly_to_json(closed_inverse(p));
  return o;
}

Outcome family_enumerate(const Args& args, const CliConfig& cfg) {
  EnumerationOptions opts;
  opts.dedupe = !args.no_dedupe;
  opts.parallelism = cfg.parallelism;
  if (args.q * args.q > cfg.max_cardinality) {
    throw BoundExceeded("F_{q^2} for q = " + std::to_string(args.q) + " exceeds the cardinality bound");
  }
  const EnumerationReport r = enumerate_family(args.q, parse_variant(args.variant), opts);
  Outcome o{base_payload("family enumerate")};
  o.payload.update(report_to_json(r));
  if (!(r.all_pp && r.all_inv_ok && r.all_identity_ok)) {
    o.payload["witness"] = r.failures.empty() ? Json(nullptr) : params_to_json(r.failures.front());
    o.code = kExitNegative;
  }
  return o;
}

// ---- lin ----

SubfieldView view_from_args(const Args& args, const CliConfig& cfg) {
  if (args.n == 0) throw UsageError("--n must be at least 1");
  return SubfieldView::over(args.q, static_cast<unsigned>(args.n), cfg.max_cardinality);
}

LinearizedPoly lin_from_args(const Args& args, const SubfieldView& view) {
  auto a = parse_elems(view.big(), args.coeffs, "linearized coefficient");
  if (a.size() != view.n()) {
    throw UsageError("--coeffs needs exactly n = " + std::to_string(view.n()) + " entries");
  }
  return LinearizedPoly(view, std::move(a));
}

std::vector<FieldElem> basis_from_args(const std::string& text, const SubfieldView& view,
                                       const std::string& what) {
  if (text.empty()) return canonical_basis(view);
  auto basis = parse_elems(view.big(), text, what);
  if (basis.size() != view.n()) {
    throw UsageError(what + " needs exactly n = " + std::to_string(view.n()) + " entries");
  }
  if (!is_basis(basis, view).basis) throw UsageError(what + " is not a basis over F_q");
  return basis;
}

Outcome lin_invert(const Args& args, const CliConfig& cfg) {
  const SubfieldView view = view_from_args(args, cfg);
  const LinearizedPoly L = lin_from_args(args, view);
  Outcome o{base_payload("lin invert")};
  o.payload["determinant"] = determinant(dickson(L)).value;
  try {
    o.payload["inverse"] = lin_to_json(cofactor_inverse(L));
    o.payload["pp"] = true;
  } catch (const std::domain_error&) {
    o.payload["pp"] = false;
    o.payload["witness"] = Json{{"kernel", json_or_null(kernel_element(tabulate(L), view.big()))}};
    o.code = kExitNegative;
  }
  return o;
}

Outcome lin_criteria(const Args& args, const CliConfig& cfg) {
  const SubfieldView view = view_from_args(args, cfg);
  view.big().require_exhaustive("lin criteria");
  const LinearizedPoly L = lin_from_args(args, view);
  const auto theta = basis_from_args(args.theta, view, "--theta");
  const ValueTable table = tabulate(L);
  const FieldElem det = determinant(dickson(L));
  const TraceForm tf = to_trace_form(L, theta);
  const D1Result d1 = d1_check(tf);
  const TraceCriterionResult tc = trace_criterion(L, theta);

  Json verdicts;
  verdicts["exhaustive"] = is_permutation(table);
  verdicts["dickson"] = !det.is_zero();
  verdicts["omega_basis"] = pp_by_basis(tf);
  verdicts["d1"] = d1.pp;
  verdicts["trace"] = tc.pp;
  bool agree = true;
  for (const auto& [k, v] : verdicts.items()) agree = agree && v == verdicts["exhaustive"];

  Outcome o{base_payload("lin criteria")};
  o.payload["map"] = lin_to_json(L);
  o.payload["theta"] = encodings_to_json(theta);
  o.payload["omega"] = encodings_to_json(tf.omega);
  o.payload["determinant"] = det.value;
  o.payload["d1_determinant"] = d1.determinant.value;
  o.payload["verdicts"] = verdicts;
  o.payload["agree"] = agree;
  const bool pp = verdicts["exhaustive"].get<bool>();
  o.payload["pp"] = pp;
  if (!pp || !agree) {
    Json w;
    w["kernel"] = json_or_null(kernel_element(table, view.big()));
    w["trace_u"] = json_or_null(tc.witness);
    o.payload["witness"] = w;
    o.code = kExitNegative;
  }
  return o;
}

Outcome lin_trace_form(const Args& args, const CliConfig& cfg) {
  const SubfieldView view = view_from_args(args, cfg);
  const LinearizedPoly L = lin_from_args(args, view);
  const auto theta = basis_from_args(args.theta, view, "--theta");
  const TraceForm tf = to_trace_form(L, theta);
  Outcome o{base_payload("lin trace-form")};
  o.payload["trace_form"] = trace_form_to_json(tf);
  o.payload["dual_theta"] = encodings_to_json(dual_basis(theta, view));
  o.payload["pp"] = pp_by_basis(tf);
  return o;
}

Outcome lin_degenerate(const Args& args, const CliConfig& cfg) {
  const SubfieldView view = view_from_args(args, cfg);
  view.big().require_exhaustive("lin degenerate");
  const Field& F = view.big();
  const auto theta = basis_from_args(args.theta, view, "--theta");
  const auto v = basis_from_args(args.vbasis, view, "--v");
  std::vector<FieldElem> a = parse_elems(F, args.acoeffs, "--a coefficient");
  if (args.acoeffs.empty()) a.assign(view.n(), F.one());
  const DegenerateMap d = degenerate_L(theta, v, a, view);

  std::vector<ValueTable> psis;
  for (const auto& e : d.dual_v) {
    ValueTable t;
    for (const auto& x : F.elements()) t.push_back(rel_trace(F.mul(e, x), view));
    psis.push_back(std::move(t));
  }
  const Poly f = d.L.to_poly();
  AuditOptions opts;
  opts.parallelism = cfg.parallelism;
  const AuditResult audit = local_pp_audit(psis, std::span<const Poly>(&f, 1), opts);

  Outcome o{base_payload("lin degenerate")};
  o.payload["map"] = lin_to_json(d.L);
  o.payload["omega"] = d.omega.value;
  o.payload["image"] = encodings_to_json(d.image);
  o.payload["image_size"] = d.image.size();
  o.payload["pp"] = false;
  o.payload["functionals"] = encodings_to_json(d.dual_v);
  o.payload["all_compositions_surjective"] = true;
  o.payload["audit_flags_counterexample"] = !audit.counterexamples.empty();
  o.payload["witness"] = collision_witness(tabulate(d.L));
  return o;
}

Outcome lin_min_witness(const Args& args, const CliConfig& cfg) {
  const SubfieldView view = view_from_args(args, cfg);
  const MinWitness w = min_trace_witness(view);
  Outcome o{base_payload("lin min-witness")};
  o.payload["q"] = view.q();
  o.payload["n"] = view.n();
  o.payload["size"] = w.size;
  o.payload["witnesses"] = encodings_to_json(w.witnesses);
  o.payload["non_pp_maps"] = w.non_pp_maps;
  return o;
}

// ---- mult ----

Outcome mult_check_cmd(const Args& args, const CliConfig& cfg) {
  const Field F = field_of_order(args.q, cfg);
  const Poly h = parse_poly(F, args.h);
  const MultVerdict v = mult_check(F, args.r, args.s, h);
  Outcome o{base_payload("mult check")};
  o.payload["pp"] = v.pp;
  o.payload["reason"] = to_string(v.reason);
  o.payload["gcd_ok"] = v.gcd_ok;
  o.payload["permutes_mu"] = v.permutes_mu;
  o.payload["mu"] = encodings_to_json(v.mu);
  o.payload["f"] = encodings_to_json(mult_poly(args.r, args.s, h).coeffs());
  if (!v.pp) {
    Json w = collision_witness(tabulate(mult_poly(args.r, args.s, h)));
    w["mu_element"] = json_or_null(v.witness);
    o.payload["witness"] = w;
    o.code = kExitNegative;
  }
  return o;
}

// ---- export ----

Outcome export_sbox(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("export sbox");
  const ValueTable t = tabulate(parse_poly(F, args.poly));
  Outcome o{base_payload("export sbox")};
  if (!is_permutation(t)) {
    o.payload["pp"] = false;
    o.payload["witness"] = collision_witness(t);
    o.code = kExitNegative;
    return o;
  }
  std::ostringstream s;
  if (args.sbox_format == "c-array") {
    s << "const unsigned sbox[" << t.size() << "] = {";
    for (std::size_t x = 0; x < t.size(); ++x) s << (x ? ", " : "") << t[x].value;
    s << "};\n";
  } else if (args.sbox_format == "csv") {
    s << "x,f(x)\n";
    for (std::size_t x = 0; x < t.size(); ++x) s << x << ',' << t[x].value << '\n';
  } else {
    throw UsageError("export format must be c-array or csv; got '" + args.sbox_format + "'");
  }
  o.raw = s.str();
  return o;
}

Outcome pp_random(const Args& args, const CliConfig& cfg) {
  const Field F = parse_field(args.field, cfg);
  F.require_exhaustive("pp random");
  std::mt19937_64 rng(cfg.seed);
  ValueTable t = F.elements();
  // Fisher-Yates with an explicit reduction so output is stable across
  // standard library implementations.
  for (std::size_t i = t.size(); i > 1; --i) std::swap(t[i - 1], t[rng() % i]);
  Outcome o{base_payload("pp random")};
  o.payload["seed"] = cfg.seed;
  o.payload["poly"] = poly_to_json(interpolate(F, t));
  o.payload["table"] = table_to_json(t);
  return o;
}

using Handler = std::function<Outcome(const Args&, const CliConfig&)>;

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation polynomials over finite fields: verification, construction, inversion",
               "ffperm"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  app.add_option("--config", args.config_path, "JSON file with max_cardinality, format, parallelism, seed");
  app.add_option("--max-q", args.max_q, "Largest field cardinality handled exhaustively");
  app.add_option("--output", args.output, "Output format: json, csv or plain");
  app.add_option("--parallelism", args.parallelism, "Worker threads for enumerations");
  app.add_option("--seed", args.seed, "Seed for randomized commands");

  std::map<CLI::App*, Handler> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, help);
    handlers[sub] = std::move(h);
    return sub;
  };
  auto field_opt = [&](CLI::App* sub) {
    sub->add_option("--field", args.field, "Field as p,m")->required();
  };
  auto poly_opt = [&](CLI::App* sub) {
    sub->add_option("--poly", args.poly, "Coefficient encodings, constant term first")->required();
  };

  CLI::App* field = app.add_subcommand("field", "Finite field utilities");
  field->require_subcommand(1);
  CLI::App* show = leaf(field, "show", "Print the canonical field GF(p^m)", field_show);
  show->add_option("--p", args.p, "Characteristic")->required();
  show->add_option("--m", args.m, "Extension degree")->required();
  show->add_option("--modulus", args.modulus, "Explicit monic modulus, constant term first");

  CLI::App* pp = app.add_subcommand("pp", "Permutation checks for a single polynomial");
  pp->require_subcommand(1);
  for (auto [name, help, h] : {std::tuple{"verify", "Exhaustive bijectivity test", pp_verify},
                               std::tuple{"invert", "Compositional inverse", pp_invert},
                               std::tuple{"image", "Value set", pp_image}}) {
    CLI::App* sub = leaf(pp, name, help, h);
    field_opt(sub);
    poly_opt(sub);
  }
  CLI::App* local = leaf(pp, "local", "Fiber-wise certification against phi", pp_local);
  field_opt(local);
  poly_opt(local);
  local->add_option("--phi", args.phi, "Coefficient encodings of phi")->required();
  CLI::App* linv = leaf(pp, "local-inverse", "Inverse from tables psi_i and a combiner", pp_local_inverse);
  field_opt(linv);
  poly_opt(linv);
  linv->add_option("--psi", args.psi, "Value table of psi_i; repeat or separate with ';'")->required();
  linv->add_option("--combiner", args.combiner, "Expression such as [\"add\",[\"var\",0],[\"var\",1]]")
      ->required();
  CLI::App* rnd = leaf(pp, "random", "Random permutation polynomial from --seed", pp_random);
  field_opt(rnd);

  CLI::App* family = app.add_subcommand("family", "The u x^q + v x + g(x^q + a x) family over F_{q^2}");
  family->require_subcommand(1);
  auto family_params = [&](CLI::App* sub) {
    sub->add_option("--q", args.q, "Subfield order")->required();
    sub->add_option("--variant", args.variant, "I or II");
  };
  for (auto [name, help, h] :
       {std::tuple{"validate", "Check the parameter conditions", Handler(family_validate)},
        std::tuple{"build", "Build f", Handler([](const Args& a, const CliConfig& c) {
                     return family_build_or_invert(a, c, false);
                   })},
        std::tuple{"invert", "Build f and its closed-form inverse",
                   Handler([](const Args& a, const CliConfig& c) { return family_build_or_invert(a, c, true); })}}) {
    CLI::App* sub = leaf(family, name, help, h);
    family_params(sub);
    sub->add_option("--a", args.a, "a with a^{q+1} = 1")->required();
    sub->add_option("--u", args.u, "u")->required();
    sub->add_option("--v", args.v, "v")->required();
    sub->add_option("--c", args.c, "c in F_q^*")->required();
    sub->add_option("--b", args.b, "b_1..b_{q-1} (default all zero)");
  }
  CLI::App* en = leaf(family, "enumerate", "Exhaustive enumeration of valid parameters", family_enumerate);
  family_params(en);
  en->add_flag("--no-dedupe", args.no_dedupe, "Skip counting distinct polynomials");

  CLI::App* lin = app.add_subcommand("lin", "Linearized polynomials over F_{q^n}");
  lin->require_subcommand(1);
  auto qn = [&](CLI::App* sub) {
    sub->add_option("--q", args.q, "Subfield order")->required();
    sub->add_option("--n", args.n, "Relative degree")->required();
  };
  for (auto [name, help, h] : {std::tuple{"invert", "Inverse via cofactors of the Dickson matrix", lin_invert},
                               std::tuple{"criteria", "All permutation criteria with an agreement check", lin_criteria},
                               std::tuple{"trace-form", "Trace representation for a basis theta", lin_trace_form}}) {
    CLI::App* sub = leaf(lin, name, help, h);
    qn(sub);
    sub->add_option("--coeffs", args.coeffs, "a_0..a_{n-1}")->required();
    if (std::string(name) != "invert") sub->add_option("--theta", args.theta, "Basis (default canonical)");
  }
  CLI::App* deg = leaf(lin, "degenerate", "Non-permutation passing every dual-basis trace test", lin_degenerate);
  qn(deg);
  deg->add_option("--theta", args.theta, "Basis theta (default canonical)");
  deg->add_option("--v", args.vbasis, "Basis v (default canonical)");
  deg->add_option("--a", args.acoeffs, "Coefficients in F_q^* (default all one)");
  CLI::App* mw = leaf(lin, "min-witness", "Smallest set of trace functionals exposing every non-permutation",
                      lin_min_witness);
  qn(mw);

  CLI::App* mult = app.add_subcommand("mult", "Polynomials of the form x^r h(x^s)");
  mult->require_subcommand(1);
  CLI::App* mc = leaf(mult, "check", "Criterion over the roots of unity", mult_check_cmd);
  mc->add_option("--q", args.q, "Field order")->required();
  mc->add_option("--r", args.r, "r")->required();
  mc->add_option("--s", args.s, "s, dividing q - 1")->required();
  mc->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  mc->add_option("--h", args.h, "Coefficients of h")->required();

  CLI::App* exp = app.add_subcommand("export", "Lookup-table export");
  exp->require_subcommand(1);
  CLI::App* sbox = leaf(exp, "sbox", "Write the value table of a permutation", export_sbox);
  field_opt(sbox);
  poly_opt(sbox);
  sbox->add_option("--format", args.sbox_format, "c-array or csv");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ffperm: " << e.what() << '\n';
    return kExitUsage;
  }

  CliConfig cfg;
  try {
    if (!args.config_path.empty()) load_config_file(args.config_path, cfg);
    if (const char* env = std::getenv("FFPERM_MAX_Q"); env && *env) {
      const auto v = parse_list(env, "FFPERM_MAX_Q");
      if (v.size() != 1) throw UsageError("FFPERM_MAX_Q must be a single integer");
      cfg.max_cardinality = v[0];
    }
    if (app.count("--max-q")) cfg.max_cardinality = args.max_q;
    if (app.count("--output")) cfg.format = parse_format(args.output);
    if (app.count("--parallelism")) cfg.parallelism = static_cast<unsigned>(args.parallelism);
    if (app.count("--seed")) cfg.seed = args.seed;
    validate_config(cfg);
  } catch (const std::exception& e) {
    err << "ffperm: " << e.what() << '\n';
    return kExitUsage;
  }

  const Handler* handler = nullptr;
  for (const auto& [sub, h] : handlers) {
    if (sub->parsed()) handler = &h;
  }
  if (!handler) {
    err << "ffperm: no command given\n" << app.help();
    return kExitUsage;
  }

  try {
    const Outcome o = (*handler)(args, cfg);
    if (o.raw) {
      out << *o.raw;
    } else {
      emit(o.payload, cfg.format, out);
    }
    return o.code;
  } catch (const std::invalid_argument& e) {  // includes bound and usage errors
    err << "ffperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "ffperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // An internal cross-check disagreed; the message names the failing check.
    Json j = base_payload("error");
    j["error"] = "internal consistency check failed";
    j["detail"] = e.what();
    emit(j, cfg.format, out);
    err << "ffperm: " << e.what() << '\n';
    return kExitNegative;
  }
}

}  // namespace ffperm::cli
