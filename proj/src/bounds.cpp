#include "hilco/bounds.hpp"

#include <algorithm>

namespace hilco {

namespace {

BoundEntry make_entry(std::string id, std::string statement, bool applicable,
                      std::string reason, Rat lhs, Rat rhs, std::string note = "") {
  BoundEntry e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.applicable = applicable;
  e.reason = std::move(reason);
  if (applicable) {
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.holds = e.lhs <= e.rhs;
    e.equality = e.lhs == e.rhs;
  }
  e.note = std::move(note);
  return e;
}

bool q_matches(const std::vector<long long>& Q, long long q0, long long q1,
               long long top_degree) {
  // Template: [q0, q1, 1, 1, ..., 1] of exact degree top_degree.
  if (top_degree < 1) return false;
  if (static_cast<long long>(Q.size()) != top_degree + 1) return false;
  if (Q[0] != q0 || Q[1] != q1) return false;
  for (long long j = 2; j <= top_degree; ++j) {
    if (Q[static_cast<size_t>(j)] != 1) return false;
  }
  return true;
}

bool a_second_top_at_most(const InstanceInvariants& inv, long long bound) {
  // graded.a0 holds a_{d-1}; absent means minus infinity.
  return !inv.graded.a0 || *inv.graded.a0 <= bound;
}

}  // namespace

long long extremal_e1_value(const InstanceInvariants& inv) {
  return binom(inv.e0 - inv.b + 1, 2) + inv.b - inv.len_M_mod_IM;
}

bool matches_extremal_numerator(const InstanceInvariants& inv) {
  return q_matches(inv.hilbert.Q, inv.len_M_mod_IM, inv.b + 1 - inv.len_M_mod_IM,
                   inv.e0 - inv.b);
}

bool matches_strict_extremal_numerator(const InstanceInvariants& inv) {
  return q_matches(inv.hilbert.Q, inv.len_M_mod_IM, inv.b + 2 - inv.len_M_mod_IM,
                   inv.e0 - inv.b - 1);
}

std::vector<BoundEntry> evaluate_bounds(const InstanceInvariants& inv) {
  std::vector<BoundEntry> out;
  const long long e0 = inv.e0;
  const long long e1 = inv.e1;
  const long long e2 = inv.e2;
  const long long b = inv.b;
  const long long lMI = inv.len_M_mod_IM;
  const std::string not_ring = "only stated for the ring case M = A";
  const std::string not_d1 = "stated for one-dimensional instances";

  if (inv.d == 1) {
    out.push_back(make_entry("e1_module", "e1 <= C(e0-b+1,2) + b - len(M/IM)", true, "",
                             Rat(e1), Rat(extremal_e1_value(inv))));

    out.push_back(make_entry("e1_module_strict",
                             "e1 <= C(e0-b,2) + b + 1 - len(M/IM)", inv.e0 > inv.e0_mb,
                             inv.e0 > inv.e0_mb ? "" : "needs e0 > e0(m^b, M)", Rat(e1),
                             Rat(binom(e0 - b, 2) + b + 1 - lMI)));

    out.push_back(make_entry("e1_deep", "e1 <= C(e0-b,2) for b >= 2", b >= 2,
                             b >= 2 ? "" : "needs b >= 2", Rat(e1), Rat(binom(e0 - b, 2))));

    out.push_back(make_entry("e1_gencount",
                             "e1 <= C(e0,2) - C(mu(I)-d,2) - len(A/I) + 1", inv.ring_case,
                             inv.ring_case ? "" : not_ring, Rat(e1),
                             Rat(binom(e0, 2) - binom(inv.mu_I - inv.d, 2) - lMI + 1)));

    {
      const bool ok = inv.ring_case && inv.mu_closure && inv.len_A_mod_closure;
      out.push_back(make_entry(
          "e1_gencount_closure",
          "e1 <= C(e0,2) - C(mu(~I)-1,2) - len(A/~I) + 1", ok,
          ok ? "" : not_ring, Rat(e1),
          ok ? Rat(binom(e0, 2) - binom(*inv.mu_closure - 1, 2) - *inv.len_A_mod_closure + 1)
             : Rat(0)));
    }

    out.push_back(make_entry("e1_mult_chain",
                             "e1 <= (e0(m)-1)*(e0 - b*e0(m)) + e1(m)", inv.ring_case,
                             inv.ring_case ? "" : not_ring, Rat(e1),
                             Rat((inv.e0_m - 1) * (e0 - b * inv.e0_m) + inv.e1_m)));

    out.push_back(make_entry("e1_embdim",
                             "e1 <= floor(C(e0-b+1,2)/(2b-1)) - C(mu(m)-d,2)",
                             inv.ring_case, inv.ring_case ? "" : not_ring, Rat(e1),
                             Rat(binom(e0 - b + 1, 2) / (2 * b - 1) -
                                 binom(inv.mu_m - inv.d, 2))));

    out.push_back(make_entry("e1_embdim_b1", "e1 <= C(e0,2) - C(mu(m)-1,2)",
                             inv.ring_case, inv.ring_case ? "" : not_ring, Rat(e1),
                             Rat(binom(e0, 2) - binom(inv.mu_m - 1, 2))));

    {
      const bool ok = inv.ring_case && b >= 2 && e0 >= b + 5;
      out.push_back(make_entry("e1_embdim_half",
                               "e1 <= C(e0-b,2)/2 - C(mu(m)-d,2)", ok,
                               ok ? "" : "needs the ring case with b >= 2 and e0 >= b+5",
                               Rat(e1),
                               Rat(binom(e0 - b, 2)) / 2 - Rat(binom(inv.mu_m - inv.d, 2))));
    }

    {
      const bool ok = inv.ring_case && inv.integral_colength.has_value();
      out.push_back(make_entry(
          "e1_integral_closure", "e1 <= C(e0 - len(A/intcl(I)) + 1, 2)", ok,
          ok ? "" : not_ring, Rat(e1),
          ok ? Rat(binom(e0 - *inv.integral_colength + 1, 2)) : Rat(0),
          "valuative integral closure; residue field here is Q rather than "
          "algebraically closed"));
    }

    {
      const bool ok = inv.r_sampled.has_value();
      out.push_back(make_entry("r_bound", "r(I,M) <= e0 - b", ok,
                               ok ? "" : "no certified superficial element",
                               ok ? Rat(*inv.r_sampled) : Rat(0), Rat(e0 - b),
                               "lhs is a sampled upper estimate of r(I,M)"));
    }

    {
      const bool ok = inv.r_sampled.has_value();
      const long long rp = ok ? std::max<long long>(1, *inv.r_sampled) : 1;
      out.push_back(make_entry("e2_vs_reduction", "e2 <= (max(1,r)-1) * e1", ok,
                               ok ? "" : "no certified superficial element", Rat(e2),
                               Rat((rp - 1) * e1),
                               "evaluated with the best certified reduction number"));
    }
  } else {
    out.push_back(make_entry("e2_cubic", "e2 <= C(e0-b+1,3)", true, "", Rat(e2),
                             Rat(binom(e0 - b + 1, 3))));

    out.push_back(make_entry("e2_linear", "e2 <= (e0-b-1) * e1", e0 >= b + 1,
                             e0 >= b + 1 ? "" : "needs e0 >= b+1", Rat(e2),
                             Rat((e0 - b - 1) * e1)));

    {
      const bool ok = inv.ring_case && e0 >= b + 1;
      out.push_back(make_entry(
          "e2_embdim", "e2 <= 3*C(e0-b+1,3)/(2b-1) - (e0-b-1)*C(mu(m)-d,2)", ok,
          ok ? "" : "needs the ring case with e0 >= b+1", Rat(e2),
          Rat(3 * binom(e0 - b + 1, 3)) / Rat(2 * b - 1) -
              Rat((e0 - b - 1) * binom(inv.mu_m - inv.d, 2))));
    }

    out.push_back(make_entry("e2_nonneg", "0 <= e2", true, "", Rat(0), Rat(e2)));
  }
  (void)not_d1;
  return out;
}

std::vector<CharacterizationEntry> evaluate_characterizations(
    const InstanceInvariants& inv) {
  std::vector<CharacterizationEntry> out;
  const long long e0 = inv.e0;
  const long long e1 = inv.e1;
  const long long e2 = inv.e2;
  const long long b = inv.b;
  const long long lMI = inv.len_M_mod_IM;
  const int reg = inv.graded.reg;
  const bool eh11_equality = e1 == extremal_e1_value(inv);

  if (inv.d == 1) {
    {
      CharacterizationEntry c;
      c.id = "e1_extremal";
      c.statement = "equality in the first e1 bound, the numerator shape, and the "
                    "regularity formulas are equivalent (e0 >= b+2)";
      c.applicable = e0 >= b + 2;
      if (!c.applicable) c.reason = "needs e0 >= b+2";
      const bool i = eh11_equality;
      const bool ii = matches_extremal_numerator(inv);
      const bool iii = a_second_top_at_most(inv, 0) && reg == e0 - b;
      const bool iv = reg == binom(e0 - b + 2, 2) + b - e1 - lMI - 1;
      c.conditions = {{"e1_equality", i}, {"numerator_shape", ii},
                      {"a0_le_0_and_reg", iii}, {"reg_formula", iv}};
      c.all_equivalent = (i == ii) && (ii == iii) && (iii == iv);
      if (c.applicable && (i || ii || iii || iv)) {
        c.consequences = {{"b_equals_1", b == 1}, {"e0_equals_e0_m", e0 == inv.e0_m}};
      }
      out.push_back(std::move(c));
    }

    {
      CharacterizationEntry c;
      c.id = "e1_extremal_strict";
      c.statement = "equality in the strict e1 bound and its series/regularity "
                    "forms are equivalent (e0 > e0(m^b,M), e0 >= b+3)";
      c.applicable = inv.e0 > inv.e0_mb && e0 >= b + 3;
      if (!c.applicable) c.reason = "needs e0 > e0(m^b,M) and e0 >= b+3";
      const bool i = e1 == binom(e0 - b, 2) + b + 1 - lMI;
      const bool ii = matches_strict_extremal_numerator(inv);
      const bool iii = a_second_top_at_most(inv, 0) && reg == e0 - b - 1;
      const bool iv = reg == binom(e0 - b + 1, 2) + b - e1 - lMI;
      c.conditions = {{"e1_equality", i}, {"numerator_shape", ii},
                      {"a0_le_0_and_reg", iii}, {"reg_formula", iv}};
      c.all_equivalent = (i == ii) && (ii == iii) && (iii == iv);
      out.push_back(std::move(c));
    }

    {
      CharacterizationEntry c;
      c.id = "extremal_ideal_structure";
      c.statement = "structure of I and A at equality in the first e1 bound "
                    "(ring case, e0 >= 3)";
      // The structural statement is pinned to the b = 1 shape of the bound.
      const bool literal_equality = e1 == binom(e0, 2) + 1 - lMI;
      c.applicable = inv.ring_case && e0 >= 3 && literal_equality &&
                     inv.closure_equals_maximal.has_value();
      if (!c.applicable) c.reason = "needs the ring case with e0 >= 3 and the e1 equality";
      if (c.applicable) {
        const bool tilde_max = *inv.closure_equals_maximal;
        const bool sq = *inv.square_equals_mI;
        const bool mu2 = inv.mu_I == 2;
        const bool mu_m_23 = inv.mu_m == 2 || inv.mu_m == 3;
        c.conditions = {{"closure_is_maximal", tilde_max},
                        {"square_equals_mI", sq},
                        {"mu_I_equals_2", mu2},
                        {"mu_m_in_2_3", mu_m_23}};
        if (inv.mu_m == 2) {
          c.conditions.emplace_back("ideal_equals_maximal",
                                    inv.ideal_equals_maximal.value_or(false));
          c.conditions.emplace_back("graded_depth_1", inv.graded.depth == 1);
        } else if (inv.mu_m == 3) {
          bool powers = !inv.powers_equal_maximal.empty();
          for (bool p : inv.powers_equal_maximal) powers = powers && p;
          c.conditions.emplace_back("powers_match_maximal", powers);
          c.conditions.emplace_back("len_A_mod_I_equals_2", lMI == 2);
          c.conditions.emplace_back("graded_depth_0", inv.graded.depth == 0);
        }
        c.all_equivalent = true;
        for (const auto& [name, v] : c.conditions) c.all_equivalent = c.all_equivalent && v;
      }
      out.push_back(std::move(c));
    }

    {
      CharacterizationEntry c;
      c.id = "extremal_forces_b_one";
      c.statement = "equality in the first e1 bound with e0 > b forces b = 1";
      c.applicable = e0 > b && eh11_equality;
      if (!c.applicable) c.reason = "needs e0 > b and the e1 equality";
      if (c.applicable) {
        c.conditions = {{"b_equals_1", b == 1}};
        c.all_equivalent = b == 1;
      }
      out.push_back(std::move(c));
    }

    {
      CharacterizationEntry c;
      c.id = "degenerate_multiplicity";
      c.statement = "e0 = b happens exactly for a power of the parameter of a "
                    "regular ring acting on a free module";
      c.applicable = e0 == b;
      if (!c.applicable) c.reason = "needs e0 = b";
      if (c.applicable) {
        c.conditions = {{"e1_vanishes", e1 == 0}, {"e1_bound_equality", eh11_equality}};
        if (inv.ring_case) {
          c.conditions.emplace_back("ring_is_regular", inv.e0_m == 1);
        }
        c.all_equivalent = true;
        for (const auto& [name, v] : c.conditions) c.all_equivalent = c.all_equivalent && v;
      }
      out.push_back(std::move(c));
    }
  } else {
    CharacterizationEntry c;
    c.id = "e2_extremal";
    c.statement = "equality in the e2 bound, the numerator shape, and the "
                  "depth/regularity forms are equivalent (d >= 2, e0 >= b+2)";
    c.applicable = e0 >= b + 2;
    if (!c.applicable) c.reason = "needs e0 >= b+2";
    const bool depth_ok = inv.graded.depth >= inv.d - 1;
    const bool i = e2 == binom(e0 - b + 1, 3);
    const bool ii = matches_extremal_numerator(inv);
    const bool iii = depth_ok && e1 == extremal_e1_value(inv);
    const bool iv = depth_ok && reg == e0 - b && a_second_top_at_most(inv, 1 - inv.d);
    const bool v = depth_ok && reg == binom(e0 - b + 2, 2) + b - e1 - lMI - 1;
    c.conditions = {{"e2_equality", i}, {"numerator_shape", ii},
                    {"depth_and_e1_equality", iii}, {"depth_reg_a_invariant", iv},
                    {"depth_reg_formula", v}};
    c.all_equivalent = (i == ii) && (ii == iii) && (iii == iv) && (iv == v);
    if (c.applicable && (i || ii || iii || iv || v)) {
      c.consequences = {{"b_equals_1", b == 1}};
    }
    out.push_back(std::move(c));
  }
  return out;
}

InstanceInvariants lift_instance(const InstanceInvariants& inv, int k) {
  if (k <= 0) return inv;
  InstanceInvariants out = inv;
  out.d += k;
  out.mu_I += k;
  out.mu_m += k;
  out.hilbert = lift_hilbert(inv.hilbert, k);
  out.graded = lift_graded(inv.graded, k);
  out.pn = out.hilbert.pn;
  return out;
}

}  // namespace hilco
