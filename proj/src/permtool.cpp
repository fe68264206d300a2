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

#include "ffperm/permtool.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace ffperm {

namespace {

void check_table(std::span<const FieldElem> table, std::size_t q, const char* what) {
  if (table.size() != q) {
    throw std::invalid_argument(std::string(what) + ": expected a table of length " +
                                std::to_string(q) + ", got " + std::to_string(table.size()));
  }
  if (table.empty()) return;
  const std::uint64_t ctx = table[0].ctx;
  for (auto v : table) {
    if (v.ctx != ctx) throw ContextMismatch(std::string(what) + ": mixed-field table");
    if (v.value >= q) throw std::out_of_range(std::string(what) + ": value out of range");
  }
}

}  // namespace

bool is_permutation(std::span<const FieldElem> table) {
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    if (v.value >= table.size() || seen[v.value]) return false;
    seen[v.value] = true;
  }
  return true;
}

bool is_permutation(const Poly& f) {
  f.field().require_exhaustive("is_permutation");
  return is_permutation(tabulate(f));
}

Poly brute_inverse(const Poly& f) {
  const Field& F = f.field();
  const ValueTable table = tabulate(f);
  ValueTable inv(table.size(), F.zero());
  std::vector<bool> seen(table.size(), false);
  for (std::size_t x = 0; x < table.size(); ++x) {
    const auto y = table[x].value;
    if (seen[y]) throw WitnessError("not a permutation: value hit twice", table[x]);
    seen[y] = true;
    inv[y] = F.elem(x);
  }
  return interpolate(F, inv);
}

std::vector<FieldElem> image(std::span<const FieldElem> table) {
  std::vector<FieldElem> out(table.begin(), table.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FieldElem> image(const Poly& f) { return image(tabulate(f)); }

bool surjective_onto(std::span<const FieldElem> table, std::span<const FieldElem> target) {
  const auto im = image(table);
  return std::equal(im.begin(), im.end(), target.begin(), target.end());
}

ValueTable compose_tables(std::span<const FieldElem> psi, std::span<const FieldElem> f) {
  ValueTable out;
  out.reserve(f.size());
  for (auto y : f) {
    if (y.value >= psi.size()) throw std::out_of_range("compose_tables: value outside domain");
    out.push_back(psi[y.value]);
  }
  return out;
}

Fibers fibers_of(std::span<const FieldElem> phi) {
  Fibers out;
  out.image = image(phi);
  out.members.resize(out.image.size());
  for (std::size_t x = 0; x < phi.size(); ++x) {
    const auto it = std::lower_bound(out.image.begin(), out.image.end(), phi[x]);
    FieldElem member{static_cast<std::uint32_t>(x), phi[x].ctx};
    out.members[static_cast<std::size_t>(it - out.image.begin())].push_back(member);
  }
  return out;
}

std::string to_string(LocalFailure reason) {
  switch (reason) {
    case LocalFailure::none: return "none";
    case LocalFailure::not_injective_on_fiber: return "not_injective_on_fiber";
    case LocalFailure::fiber_images_overlap: return "fiber_images_overlap";
    case LocalFailure::fiber_images_not_covering: return "fiber_images_not_covering";
  }
  return "unknown";
}

LocalVerdict local_certify(std::span<const FieldElem> f, std::span<const FieldElem> phi) {
  if (f.size() != phi.size()) throw std::invalid_argument("local_certify: table sizes differ");
  const std::size_t q = f.size();
  check_table(f, q, "local_certify");
  check_table(phi, q, "local_certify");

  LocalVerdict v;
  Fibers fib = fibers_of(phi);
  v.image = std::move(fib.image);
  v.fibers = std::move(fib.members);
  const std::uint64_t ctx = q > 0 ? f[0].ctx : 0;
  auto elem = [ctx](std::size_t x) { return FieldElem{static_cast<std::uint32_t>(x), ctx}; };

  // preimages[y] lists, in encoding order, the x seen so far with f(x) = y.
  std::vector<std::vector<std::uint32_t>> preimages(q);
  for (std::size_t x2 = 0; x2 < q; ++x2) {
    auto& pre = preimages[f[x2].value];
    for (auto x1 : pre) {
      if (phi[x1] == phi[x2]) {
        v.reason = LocalFailure::not_injective_on_fiber;
        v.witness = std::make_pair(elem(x1), elem(x2));
        return v;
      }
    }
    pre.push_back(static_cast<std::uint32_t>(x2));
  }
  std::vector<std::int64_t> first(q, -1);
  for (std::size_t x2 = 0; x2 < q; ++x2) {
    auto& slot = first[f[x2].value];
    if (slot >= 0) {
      v.reason = LocalFailure::fiber_images_overlap;
      v.witness = std::make_pair(elem(static_cast<std::size_t>(slot)), elem(x2));
      return v;
    }
    slot = static_cast<std::int64_t>(x2);
  }
  if (std::count(first.begin(), first.end(), -1) != 0) {
    v.reason = LocalFailure::fiber_images_not_covering;
    return v;
  }
  v.bijective = true;
  return v;
}

LocalVerdict local_certify(const Poly& f, const Poly& phi) {
  if (!(f.field() == phi.field())) throw ContextMismatch("local_certify: different fields");
  return local_certify(tabulate(f), tabulate(phi));
}

ValueTable induced_psi(std::span<const FieldElem> f, std::span<const FieldElem> phi) {
  const LocalVerdict v = local_certify(f, phi);
  if (!v.bijective) {
    throw std::invalid_argument("induced_psi: local certification failed (" +
                                to_string(v.reason) + ")");
  }
  ValueTable psi(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) psi[f[x].value] = phi[x];
  return psi;
}

ValueTable induced_psi(const Poly& f, const Poly& phi) {
  if (!(f.field() == phi.field())) throw ContextMismatch("induced_psi: different fields");
  return induced_psi(tabulate(f), tabulate(phi));
}

LocalDecomposition local_decomposition(const Poly& f, const Poly& phi) {
  LocalDecomposition d;
  d.phi = tabulate(phi);
  const ValueTable ft = tabulate(f);
  d.psi = induced_psi(ft, d.phi);
  Fibers fib = fibers_of(d.phi);
  d.image = std::move(fib.image);
  d.fibers = std::move(fib.members);
  return d;
}

BigInt count_compatible_bijections(std::span<const FieldElem> phi,
                                   std::span<const FieldElem> psi) {
  if (phi.size() != psi.size()) return 0;
  const Fibers a = fibers_of(phi);
  const Fibers b = fibers_of(psi);
  if (a.image != b.image) return 0;
  BigInt total = 1;
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (a.members[i].size() != b.members[i].size()) return 0;
    for (std::size_t k = 2; k <= a.members[i].size(); ++k) total *= k;
  }
  return total;
}

Poly local_inverse(const Poly& f, std::span<const ValueTable> psis, const ExprTree& combiner) {
  const Field& F = f.field();
  const std::size_t q = F.cardinality();
  const ValueTable ft = tabulate(f);
  if (!is_permutation(ft)) throw std::invalid_argument("local_inverse: f is not a permutation");
  for (const auto& psi : psis) {
    check_table(psi, q, "local_inverse");
    if (!psi.empty()) F.check(psi[0]);
  }
  if (combiner.arity() > psis.size()) {
    throw std::invalid_argument("local_inverse: combiner uses " + std::to_string(combiner.arity()) +
                                " variables but " + std::to_string(psis.size()) +
                                " maps were given");
  }

  std::vector<FieldElem> args(psis.size());
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t i = 0; i < psis.size(); ++i) args[i] = psis[i][ft[x].value];
    if (combiner.eval(F, args).value != x) {
      throw WitnessError("local_inverse: F(phi_1(x), ..., phi_t(x)) != x", F.elem(x));
    }
  }
  ValueTable inv(q);
  for (std::size_t y = 0; y < q; ++y) {
    for (std::size_t i = 0; i < psis.size(); ++i) args[i] = psis[i][y];
    inv[y] = combiner.eval(F, args);
  }
  Poly result = interpolate(F, inv);
  if (!(result == brute_inverse(f))) {
    throw std::logic_error("local_inverse disagrees with the brute-force inverse");
  }
  return result;
}

CompositionReport composition_harness(const Poly& f, const Poly& g,
                                    std::span<const ValueTable> psis) {
  if (!(f.field() == g.field())) throw ContextMismatch("composition_harness: different fields");
  const std::size_t q = f.field().cardinality();
  const ValueTable gt = tabulate(g);
  if (!is_permutation(gt)) throw std::invalid_argument("composition_harness: g is not a permutation");
  ValueTable ginv(q);
  for (std::size_t x = 0; x < q; ++x) ginv[gt[x].value] = f.field().elem(x);
  const ValueTable ft = tabulate(f);

  CompositionReport r;
  r.f_is_pp = is_permutation(ft);
  bool all_f = true;
  bool all_ginv = true;
  for (const auto& psi : psis) {
    check_table(psi, q, "composition_harness");
    const auto target = image(psi);
    const bool sf = surjective_onto(compose_tables(psi, ft), target);
    const bool sg = surjective_onto(compose_tables(psi, ginv), target);
    r.psi_f_surjective.push_back(sf);
    r.psi_ginv_surjective.push_back(sg);
    all_f = all_f && sf;
    all_ginv = all_ginv && sg;
  }
  r.hypothesis_holds = (r.f_is_pp == all_f);
  ValueTable gf(q);
  for (std::size_t x = 0; x < q; ++x) gf[x] = gt[ft[x].value];
  r.gf_is_pp = is_permutation(gf);
  r.biconditional_holds = (r.gf_is_pp == all_ginv);
  r.consistent = !r.hypothesis_holds || r.biconditional_holds;
  if (!r.hypothesis_holds) {
    r.note = "hypothesis fails on this instance: f is " + std::string(r.f_is_pp ? "" : "not ") +
             "a PP but the psi_i o f surjectivity verdict differs";
  } else if (!r.biconditional_holds) {
    r.note = "hypothesis holds on this instance but the biconditional does not: "
             "psi_i o g^{-1} is surjective for every permutation g, while g o f is " +
             std::string(r.gf_is_pp ? "" : "not ") + "a PP";
  }
  return r;
}

AuditResult local_pp_audit(std::span<const ValueTable> psis, std::span<const Poly> candidates,
                           const AuditOptions& options) {
  AuditResult result;
  std::vector<std::vector<FieldElem>> targets;
  targets.reserve(psis.size());
  for (std::size_t i = 0; i < psis.size(); ++i) {
    targets.push_back(image(psis[i]));
    if (options.warn_on_large_image && 2 * targets.back().size() > psis[i].size()) {
      result.warnings.push_back("psi_" + std::to_string(i) + " has |S| = " +
                                std::to_string(targets.back().size()) + " > Q/2");
    }
  }

  std::vector<std::vector<AuditCounterexample>> per_chunk(std::max(1u, options.parallelism));
  detail::parallel_chunks(candidates.size(), options.parallelism,
                          [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const Poly& f = candidates[k];
      const ValueTable ft = tabulate(f);
      bool all = true;
      for (std::size_t i = 0; i < psis.size() && all; ++i) {
        check_table(psis[i], ft.size(), "local_pp_audit");
        all = surjective_onto(compose_tables(psis[i], ft), targets[i]);
      }
      const bool pp = is_permutation(ft);
      if (all != pp) per_chunk[chunk].push_back({k, f, all, pp});
    }
  });
  for (auto& chunk : per_chunk) {
    for (auto& c : chunk) result.counterexamples.push_back(std::move(c));
  }
  result.examined = candidates.size();
  return result;
}

}  // namespace ffperm
