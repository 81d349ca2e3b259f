#include "hilco/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hilco/errors.hpp"
#include "hilco/graded.hpp"
#include "hilco/hilbert.hpp"
#include "hilco/linsolve.hpp"

namespace hilco {

namespace {

constexpr const char* kVersion = "hilco 0.1.0";

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

nlohmann::json rat_json(const Rat& q) {
  if (rat_fits_int64(q)) return rat_to_int64(q);
  return rat_to_string(q);
}

nlohmann::json series_to_triples(const SeriesElement& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : f.terms) {
    out.push_back({numerator(c).convert_to<long long>(),
                   denominator(c).convert_to<long long>(), e});
  }
  return out;
}

SeriesElement series_from_triples(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("generator must be an array of [num,den,exp]");
  std::vector<std::pair<int, Rat>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) {
      throw ParseError("series term must be a [num, den, exp] triple");
    }
    const long long num = t[0].get<long long>();
    const long long den = t[1].get<long long>();
    const long long exp = t[2].get<long long>();
    if (den == 0) throw ParseError("zero denominator in series term");
    if (exp < 0) throw ParseError("negative exponent in series term");
    terms.emplace_back(static_cast<int>(exp), Rat(num, den));
  }
  return series_from_terms(std::move(terms));
}

// Everything the per-instance computations share: the four base modules and
// the memoized power chains.
struct Context {
  SemigroupPtr S;
  FractionalModule A;
  FractionalModule m;
  FractionalModule I;
  FractionalModule M;
  bool ring_case = false;
  PowerCache chain;         // I^n M
  PowerCache ideal_powers;  // I^n over A
  PowerCache m_powers_M;    // m^n M
  PowerCache m_powers_A;    // m^n over A

  Context(SemigroupPtr S_, FractionalModule A_, FractionalModule m_,
          FractionalModule I_, FractionalModule M_, bool ring)
      : S(std::move(S_)),
        A(std::move(A_)),
        m(std::move(m_)),
        I(std::move(I_)),
        M(std::move(M_)),
        ring_case(ring),
        chain(I, M),
        ideal_powers(I, A),
        m_powers_M(m, M),
        m_powers_A(m, A) {}
};

Context build_context(const Instance& inst) {
  SemigroupPtr S = make_semigroup(inst.semigroup);
  for (const auto& g : inst.ideal_generators) {
    if (g.is_zero()) throw ParseError("zero ideal generator");
    if (*g.valuation() < 1) throw ParseError("ideal generators must lie in the maximal ideal");
    for (const auto& [e, c] : g.terms) {
      if (!S->contains(e)) {
        throw ParseError("ideal generator exponent " + std::to_string(e) +
                         " lies outside the semigroup ring");
      }
    }
  }
  FractionalModule A = module_ring(S);
  FractionalModule m = module_maximal_ideal(S);
  FractionalModule I = FractionalModule::generated_by(S, inst.ideal_generators);
  FractionalModule M = inst.module_is_ring
                           ? A
                           : FractionalModule::generated_by(S, inst.module_generators);
  const bool ring = inst.module_is_ring || module_equal(M, A);
  return Context(std::move(S), std::move(A), std::move(m), std::move(I), std::move(M),
                 ring);
}

bool second_top_a_at_most(const GradedInvariants& g, long long bound) {
  return !g.a0 || *g.a0 <= bound;
}

}  // namespace

Instance instance_from_json(const nlohmann::json& j) {
  Instance inst;
  try {
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    inst.id = j.value("id", std::string("instance"));
    if (!j.contains("semigroup") || !j["semigroup"].is_array() || j["semigroup"].empty()) {
      throw ParseError("missing semigroup generator list");
    }
    for (const auto& g : j["semigroup"]) inst.semigroup.push_back(g.get<long long>());
    if (!j.contains("ideal") || !j["ideal"].is_array() || j["ideal"].empty()) {
      throw ParseError("missing ideal generator list");
    }
    for (const auto& g : j["ideal"]) inst.ideal_generators.push_back(series_from_triples(g));
    if (j.contains("module") && j["module"].is_array()) {
      inst.module_is_ring = false;
      for (const auto& g : j["module"]) {
        inst.module_generators.push_back(series_from_triples(g));
      }
      if (inst.module_generators.empty()) throw ParseError("empty module generator list");
    } else if (j.contains("module") && j["module"] != "ring") {
      throw ParseError("module must be \"ring\" or a generator list");
    }
    inst.lift = j.value("lift", 0);
    if (inst.lift < 0) throw ParseError("lift must be nonnegative");
    if (j.contains("options")) {
      const auto& o = j["options"];
      inst.options.n_max = o.value("n_max", inst.options.n_max);
      inst.options.trials = o.value("trials", inst.options.trials);
      inst.options.samples = o.value("samples", inst.options.samples);
      inst.options.seed = o.value("seed", inst.options.seed);
      inst.options.strict = o.value("strict", inst.options.strict);
      inst.options.run_oracles = o.value("run_oracles", inst.options.run_oracles);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
  return inst;
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["id"] = inst.id;
  j["semigroup"] = inst.semigroup;
  nlohmann::json ideal = nlohmann::json::array();
  for (const auto& g : inst.ideal_generators) ideal.push_back(series_to_triples(g));
  j["ideal"] = ideal;
  if (inst.module_is_ring) {
    j["module"] = "ring";
  } else {
    nlohmann::json mod = nlohmann::json::array();
    for (const auto& g : inst.module_generators) mod.push_back(series_to_triples(g));
    j["module"] = mod;
  }
  j["lift"] = inst.lift;
  j["options"] = {{"n_max", inst.options.n_max},
                  {"trials", inst.options.trials},
                  {"samples", inst.options.samples},
                  {"seed", inst.options.seed},
                  {"strict", inst.options.strict},
                  {"run_oracles", inst.options.run_oracles}};
  return j;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

AnalysisResult analyze_instance(const Instance& inst) {
  AnalysisResult result;
  result.instance = inst;
  const AnalyzeOptions& opt = inst.options;

  Context ctx = build_context(inst);

  InstanceInvariants inv;
  inv.d = 1;
  inv.ring_case = ctx.ring_case;
  inv.b = largest_b(ctx.chain, ctx.m_powers_M);
  inv.hilbert = hilbert_numerator(ctx.chain, inv.b, opt.n_max);
  inv.pn = inv.hilbert.pn;
  inv.e0 = inv.hilbert.e[0];
  inv.e1 = inv.hilbert.e[1];
  inv.e2 = inv.hilbert.e[2];
  inv.len_M_mod_IM = inv.hilbert.H.at(0);
  inv.graded = graded_invariants(ctx.chain, ctx.ideal_powers, inv.hilbert);

  {
    HilbertData hm = hilbert_numerator(ctx.m_powers_M, 1, opt.n_max);
    inv.e0_m = hm.e[0];
    inv.e1_m = hm.e[1];
    inv.e0_mb = inv.b * inv.e0_m;
  }
  inv.mu_I = minimal_generator_count(ctx.I, ctx.m);
  inv.mu_m = minimal_generator_count(ctx.m, ctx.m);
  inv.mu_M = minimal_generator_count(ctx.M, ctx.m);

  if (ctx.ring_case) {
    FractionalModule closure = ratliff_rush(ctx.chain, ctx.ideal_powers, 1);
    inv.len_A_mod_closure = length_quotient(ctx.A, closure);
    inv.mu_closure = minimal_generator_count(closure, ctx.m);
    inv.integral_colength = integral_closure_colength(ctx.I);
    inv.closure_equals_maximal = module_equal(closure, ctx.m);
    inv.square_equals_mI = module_equal(ctx.ideal_powers.at(2), module_product(ctx.m, ctx.I));
    inv.ideal_equals_maximal = module_equal(ctx.I, ctx.m);
    for (int n = 2; n <= 5; ++n) {
      inv.powers_equal_maximal.push_back(
          module_equal(ctx.ideal_powers.at(n), ctx.m_powers_A.at(n)));
    }
  }

  // Superficial certificates and reduction data.
  for (int i = 0; i < opt.samples; ++i) {
    const std::uint64_t s = mix_seed(opt.seed, static_cast<std::uint64_t>(i));
    try {
      SuperficialCertificate cert =
          find_superficial(ctx.I, ctx.chain, inv.pn, inv.b, opt.trials, s);
      const int r = reduction_number(cert.element, ctx.chain, inv.pn + 8);
      inv.r_values.push_back(r);
      result.certificates.push_back(std::move(cert));
    } catch (const SearchExhausted&) {
      result.unconfirmed.push_back("superficial_search_sample_" + std::to_string(i));
    }
  }
  if (!inv.r_values.empty()) {
    inv.r_sampled = *std::min_element(inv.r_values.begin(), inv.r_values.end());
  }

  result.base = inv;
  result.bounds = evaluate_bounds(inv);
  result.characterizations = evaluate_characterizations(inv);

  if (inst.lift >= 1) {
    InstanceInvariants lifted = lift_instance(inv, inst.lift);
    auto lifted_bounds = evaluate_bounds(lifted);
    auto lifted_chars = evaluate_characterizations(lifted);
    result.bounds.insert(result.bounds.end(), lifted_bounds.begin(), lifted_bounds.end());
    result.characterizations.insert(result.characterizations.end(), lifted_chars.begin(),
                                    lifted_chars.end());
    result.lifted = std::move(lifted);
  }

  // ---- structural check suite --------------------------------------------
  auto push_check = [&](const std::string& name, bool pass, std::string detail = "") {
    result.checks.push_back({name, pass, std::move(detail)});
  };
  const auto& H = inv.hilbert.H;
  const int pn = inv.pn;
  const long long e0 = inv.e0;
  const long long b = inv.b;

  {
    bool ok = true;
    long long acc = 0;
    for (int n = 0; n < static_cast<int>(H.size()) && n <= pn + 2; ++n) {
      acc += H[static_cast<size_t>(n)];
      if (hilbert_samuel(ctx.chain, n) != acc) ok = false;
    }
    push_check("partial_sum_identity", ok);
  }
  {
    bool ok = true;
    for (long long h : H) ok = ok && h <= e0;
    push_check("hilbert_function_bounded_by_e0", ok);
  }
  push_check("e0_equals_min_ideal_valuation", e0 == ctx.I.min_valuation());
  {
    bool ok = true;
    for (const auto& cert : result.certificates) {
      const int vx = *cert.element.valuation();
      ok = ok && vx == e0;
      const ValueSet shifted = ctx.M.values().shifted(vx);
      ok = ok && ctx.M.values().count_difference(shifted) == e0;
    }
    push_check("superficial_elements_realize_e0", ok);
  }
  {
    bool ok = true;
    for (size_t i = 0; i < result.certificates.size(); ++i) {
      const auto [s1, s2] =
          e_from_reduction(result.certificates[i].element, ctx.chain, inv.r_values[i]);
      ok = ok && s1 == inv.e1 && s2 == inv.e2;
    }
    push_check("coefficients_match_reduction_sums", ok,
               result.certificates.empty() ? "no certificates" : "");
  }
  push_check("pn_le_e0_minus_b", pn <= e0 - b);
  if (pn == e0 - b) {
    bool ok = true;
    for (int n = 0; n <= pn; ++n) {
      ok = ok && inv.graded.gbar_H[static_cast<size_t>(n)] == n + b;
    }
    push_check("border_case_filtered_hilbert_function", ok);
  }
  if (inv.e0 != inv.e0_mb) {
    push_check("pn_le_e0_minus_b_minus_1", pn <= e0 - b - 1);
    if (pn == e0 - b - 1) {
      bool ok = true;
      for (int n = 0; n <= pn; ++n) {
        ok = ok && inv.graded.gbar_H[static_cast<size_t>(n)] == n + b + 1;
      }
      push_check("strict_border_case_filtered_hilbert_function", ok);
    }
    {
      bool ok = true;
      for (int n = 0; n <= pn; ++n) {
        ok = ok && H[static_cast<size_t>(n)] >=
                       n + b + 1 + inv.graded.h0_lengths[static_cast<size_t>(n)];
      }
      push_check("hilbert_function_strict_linear_lower_bound", ok);
    }
    push_check("filtered_degree_zero_at_least_b_plus_1", inv.graded.gbar_H.at(0) >= b + 1);
  }
  {
    bool ok = true;
    for (int n = 0; n <= pn; ++n) {
      ok = ok &&
           H[static_cast<size_t>(n)] >= n + b + inv.graded.h0_lengths[static_cast<size_t>(n)];
    }
    push_check("hilbert_function_linear_lower_bound", ok);
  }
  push_check("filtered_degree_zero_at_least_b", inv.graded.gbar_H.at(0) >= b);
  {
    bool ok = true;
    for (int n = 1; n <= pn; ++n) {
      ok = ok && inv.graded.gbar_H[static_cast<size_t>(n - 1)] <
                     inv.graded.gbar_H[static_cast<size_t>(n)];
    }
    push_check("filtered_hilbert_function_strictly_increasing", ok);
  }
  push_check("a0_below_a1", !inv.graded.a0 || *inv.graded.a0 < inv.graded.a1);
  push_check("h0_vanishes_at_pn", inv.graded.h0_lengths.at(static_cast<size_t>(pn)) == 0);
  {
    bool ok = true;
    for (int n = pn; n < static_cast<int>(H.size()); ++n) {
      ok = ok && H[static_cast<size_t>(n)] == e0;
    }
    push_check("polynomial_agreement_from_pn", ok);
  }
  push_check("e2_nonnegative_via_lift", inv.e2 >= 0);
  {
    // e0(m^b, M) = b * e0(m, M), recomputed from scratch when small.
    bool ok = true;
    std::string detail;
    if (b >= 2 && inv.e0_mb <= 12) {
      PowerCache mbM(ctx.m_powers_A.at(static_cast<int>(b)), ctx.M);
      HilbertData hd = hilbert_numerator(mbM, 1, inst.options.n_max);
      ok = hd.e[0] == inv.e0_mb;
    } else {
      detail = b >= 2 ? "checked via valuations only" : "b = 1";
      ok = inv.e0_mb == b * inv.e0_m &&
           ctx.m_powers_M.at(static_cast<int>(b)).min_valuation() -
                   ctx.M.min_valuation() ==
               inv.e0_mb;
    }
    push_check("power_multiplicity_identity", ok, detail);
  }
  if (inv.e1 == extremal_e1_value(inv)) {
    const bool i = second_top_a_at_most(inv.graded, 0);
    const bool ii = (inv.graded.reg == pn && pn == e0 - b) || e0 == b || e0 == b + 1;
    bool iii = true;
    for (int n = 1; n <= pn - 1; ++n) iii = iii && H[static_cast<size_t>(n)] == b + n;
    push_check("extremal_e1_attainment_clauses", i && ii && iii);
  }
  if (inv.e0 > inv.e0_mb && inv.e1 == binom(e0 - b, 2) + b + 1 - inv.len_M_mod_IM) {
    const bool i = second_top_a_at_most(inv.graded, 0);
    const bool ii = (inv.graded.reg == pn && pn == e0 - b - 1) || e0 == b + 1 || e0 == b + 2;
    bool iii = true;
    for (int n = 1; n <= pn - 1; ++n) iii = iii && H[static_cast<size_t>(n)] == b + n + 1;
    push_check("strict_extremal_e1_attainment_clauses", i && ii && iii);
  }
  if (b >= 2) {
    const long long floor3 = binom(e0 - b + 1, 2) / 3;
    push_check("embdim_bound_dominates_deep_bound", floor3 <= binom(e0 - b, 2));
    if (e0 >= b + 5) {
      push_check("embdim_bound_half_strength", Rat(floor3) <= Rat(binom(e0 - b, 2)) / 2);
    }
  }
  if (result.lifted && e0 >= b + 2) {
    // The lifted equivalence conditions must agree member-wise with the
    // one-dimensional ones.
    auto find_char = [](const std::vector<CharacterizationEntry>& v, const std::string& id)
        -> const CharacterizationEntry* {
      for (const auto& c : v) {
        if (c.id == id) return &c;
      }
      return nullptr;
    };
    const CharacterizationEntry* h3 = find_char(result.characterizations, "e1_extremal");
    const CharacterizationEntry* b2 = find_char(result.characterizations, "e2_extremal");
    bool ok = h3 && b2;
    if (ok) {
      auto cond = [](const CharacterizationEntry& c, size_t i) {
        return c.conditions.at(i).second;
      };
      ok = cond(*b2, 1) == cond(*h3, 1) &&  // numerator shape
           cond(*b2, 2) == cond(*h3, 0) &&  // e1 equality
           cond(*b2, 3) == cond(*h3, 2) &&  // a-invariant + regularity
           cond(*b2, 4) == cond(*h3, 3);    // regularity formula
    }
    push_check("lifted_equivalence_matches_base", ok);
  }
  if (inv.graded.depth == 1 && !result.certificates.empty()) {
    // With a regular initial form, the numerator equals the Hilbert function
    // of M/xM.
    const SeriesElement& x = result.certificates.front().element;
    FractionalModule xM = module_scale(x, ctx.M);
    bool ok = true;
    FractionalModule prev = module_sum(ctx.chain.at(0), xM);
    for (int n = 0; n <= pn + 2; ++n) {
      FractionalModule next = module_sum(ctx.chain.at(n + 1), xM);
      const long long len = length_quotient(prev, next);
      const long long expected =
          n <= pn ? inv.hilbert.Q[static_cast<size_t>(n)] : 0;
      ok = ok && len == expected;
      prev = std::move(next);
    }
    push_check("depth_one_numerator_matches_quotient_module", ok);
  }
  {
    const ValueSet expected = ctx.I.values().sum(ctx.M.values());
    bool superset = expected.subset_of(ctx.chain.at(1).values());
    auto monomial = [](const FractionalModule& N) {
      for (const auto& g : N.generators()) {
        if (g.terms.size() != 1) return false;
      }
      return true;
    };
    push_check("product_values_contain_sums", superset);
    if (monomial(ctx.I) && monomial(ctx.M)) {
      push_check("monomial_product_values_exact", ctx.chain.at(1).values() == expected);
    }
  }
  {
    push_check("sum_idempotent", module_equal(module_sum(ctx.M, ctx.M), ctx.M));
    push_check("unit_product", module_equal(module_product(ctx.A, ctx.M), ctx.M));
  }
  {
    SeriesElement f = series_monomial(ctx.M.conductor() + 3);
    for (size_t i = 0; i < ctx.M.generators().size(); ++i) {
      f = series_add(f, series_scale(ctx.M.generators()[i], Rat(static_cast<long long>(i) + 2)));
    }
    const SeriesElement r1 = reduce(f, ctx.M.basis());
    push_check("reduce_idempotent", reduce(r1, ctx.M.basis()) == r1);
  }
  {
    std::vector<SeriesElement> reversed = ctx.I.generators();
    std::reverse(reversed.begin(), reversed.end());
    StandardBasis again = standard_basis(reversed, *ctx.S);
    push_check("basis_generator_order_invariant", again.values == ctx.I.values());
  }
  if (opt.run_oracles && ctx.S->conductor() <= 30) {
    bool ok = true;
    ok = ok && oracle_length(ctx.M, ctx.chain.at(1)) == inv.len_M_mod_IM;
    for (int n = 0; n <= std::min(pn, 2); ++n) {
      ok = ok && oracle_length(ctx.chain.at(n), ctx.chain.at(n + 1)) ==
                     H[static_cast<size_t>(n)];
    }
    FractionalModule mI = module_product(ctx.m, ctx.I);
    ok = ok && oracle_length(ctx.I, mI) == inv.mu_I;
    push_check("lengths_match_linear_algebra_oracle", ok);
  }

  // ---- verdicts -----------------------------------------------------------
  for (const auto& e : result.bounds) {
    if (e.applicable && !e.holds) {
      if (e.id == "r_bound") {
        result.unconfirmed.push_back(e.id);
      } else {
        result.violations.push_back(e.id);
      }
    }
  }
  for (const auto& c : result.characterizations) {
    if (c.applicable && !c.all_equivalent) result.violations.push_back(c.id);
    if (c.applicable) {
      for (const auto& [name, holds] : c.consequences) {
        if (!holds) result.violations.push_back(c.id + ":" + name);
      }
    }
  }
  for (const auto& c : result.checks) {
    if (!c.pass) result.violations.push_back("check:" + c.name);
  }
  return result;
}

namespace {

nlohmann::json bound_json(const BoundEntry& e) {
  nlohmann::json j;
  j["id"] = e.id;
  j["statement"] = e.statement;
  j["applicable"] = e.applicable;
  if (!e.applicable) {
    j["reason"] = e.reason;
  } else {
    j["lhs"] = rat_json(e.lhs);
    j["rhs"] = rat_json(e.rhs);
    j["holds"] = e.holds;
    j["equality"] = e.equality;
  }
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

nlohmann::json char_json(const CharacterizationEntry& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["applicable"] = c.applicable;
  if (!c.applicable) j["reason"] = c.reason;
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& [name, v] : c.conditions) conds.push_back({{"name", name}, {"holds", v}});
  j["conditions"] = conds;
  if (c.applicable) j["all_equivalent"] = c.all_equivalent;
  if (!c.consequences.empty()) {
    nlohmann::json cons = nlohmann::json::array();
    for (const auto& [name, v] : c.consequences) cons.push_back({{"name", name}, {"holds", v}});
    j["consequences"] = cons;
  }
  return j;
}

nlohmann::json graded_json(const GradedInvariants& g) {
  nlohmann::json j;
  j["d"] = g.d;
  if (g.a0) {
    j["a_second_top"] = *g.a0;
  } else {
    j["a_second_top"] = nullptr;  // minus infinity
  }
  j["a_top"] = g.a1;
  j["reg"] = g.reg;
  j["depth"] = g.depth;
  j["h0_lengths"] = g.h0_lengths;
  j["filtered_hilbert"] = g.gbar_H;
  j["generating_degree"] = g.delta;
  return j;
}

nlohmann::json invariants_json(const InstanceInvariants& inv) {
  nlohmann::json j;
  j["d"] = inv.d;
  j["ring_case"] = inv.ring_case;
  j["b"] = inv.b;
  j["e0"] = inv.e0;
  j["e1"] = inv.e1;
  j["e2"] = inv.e2;
  j["len_M_mod_IM"] = inv.len_M_mod_IM;
  j["mu_I"] = inv.mu_I;
  j["mu_m"] = inv.mu_m;
  j["mu_M"] = inv.mu_M;
  j["e0_m"] = inv.e0_m;
  j["e1_m"] = inv.e1_m;
  j["e0_mb"] = inv.e0_mb;
  j["pn"] = inv.pn;
  if (inv.r_sampled) {
    j["r_sampled"] = *inv.r_sampled;
  } else {
    j["r_sampled"] = nullptr;
  }
  j["r_values"] = inv.r_values;
  if (inv.len_A_mod_closure) j["len_A_mod_closure"] = *inv.len_A_mod_closure;
  if (inv.mu_closure) j["mu_closure"] = *inv.mu_closure;
  if (inv.integral_colength) j["integral_closure_colength"] = *inv.integral_colength;
  if (inv.closure_equals_maximal) j["closure_equals_maximal"] = *inv.closure_equals_maximal;
  if (inv.square_equals_mI) j["square_equals_mI"] = *inv.square_equals_mI;
  if (inv.ideal_equals_maximal) j["ideal_equals_maximal"] = *inv.ideal_equals_maximal;
  if (!inv.powers_equal_maximal.empty()) {
    j["powers_equal_maximal"] = inv.powers_equal_maximal;
  }
  return j;
}

}  // namespace

nlohmann::json report_json(const AnalysisResult& r) {
  nlohmann::json j;
  j["id"] = r.instance.id;
  j["version"] = kVersion;
  j["instance"] = instance_to_json(r.instance);

  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& e : r.bounds) bounds.push_back(bound_json(e));
  j["bounds"] = bounds;

  nlohmann::json chars = nlohmann::json::array();
  for (const auto& c : r.characterizations) chars.push_back(char_json(c));
  j["characterizations"] = chars;

  nlohmann::json checks = nlohmann::json::array();
  {
    std::vector<CheckResult> sorted = r.checks;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    for (const auto& c : sorted) {
      nlohmann::json cj;
      cj["name"] = c.name;
      cj["pass"] = c.pass;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
  }
  j["checks"] = checks;

  j["hilbert"] = {{"d", r.base.hilbert.d},
                  {"H", r.base.hilbert.H},
                  {"Q", r.base.hilbert.Q},
                  {"pn", r.base.hilbert.pn},
                  {"e", r.base.hilbert.e}};
  j["graded"] = graded_json(r.base.graded);
  j["invariants"] = invariants_json(r.base);
  if (r.lifted) {
    j["lifted"] = {{"invariants", invariants_json(*r.lifted)},
                   {"graded", graded_json(r.lifted->graded)},
                   {"hilbert",
                    {{"d", r.lifted->hilbert.d},
                     {"H", r.lifted->hilbert.H},
                     {"Q", r.lifted->hilbert.Q},
                     {"pn", r.lifted->hilbert.pn},
                     {"e", r.lifted->hilbert.e}}}};
  } else {
    j["lifted"] = nullptr;
  }

  const NumericalSemigroup S = NumericalSemigroup::from_generators(r.instance.semigroup);
  j["semigroup"] = {{"generators", r.instance.semigroup},
                    {"minimal_generators", S.minimal_generators()},
                    {"frobenius", S.frobenius()},
                    {"conductor", S.conductor()},
                    {"gaps", S.gaps()},
                    {"multiplicity", S.multiplicity()}};

  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"element", series_to_triples(c.element)},
                     {"c", c.c},
                     {"verified_to", c.verified_to},
                     {"trials_used", c.trials_used},
                     {"seed", c.seed}});
  }
  j["superficial"] = certs;

  j["violations"] = r.violations;
  j["unconfirmed"] = r.unconfirmed;
  j["status"] = !r.violations.empty()
                    ? "violation"
                    : (!r.unconfirmed.empty() ? "unconfirmed" : "ok");
  return j;
}

}  // namespace hilco
