// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Uses the shipped corpus plus a seeded 200-instance random sweep.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hilco/analysis.hpp"
#include "hilco/search.hpp"

using namespace hilco;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::string data_file(const std::string& name) {
  return std::string(HILCO_DATA_DIR) + "/instances/" + name;
}

AnalysisResult analyze_file(const std::string& name) {
  return analyze_instance(load_instance_file(data_file(name)));
}

const BoundEntry* find_bound(const AnalysisResult& r, const std::string& id) {
  for (const auto& e : r.bounds) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const CharacterizationEntry* find_char(const AnalysisResult& r, const std::string& id) {
  for (const auto& c : r.characterizations) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

struct Tally {
  long long ran = 0;
  long long failed = 0;
  std::string first_failure;

  void add(const AnalysisResult& r, const std::string& check_name) {
    for (const auto& c : r.checks) {
      if (c.name != check_name) continue;
      ++ran;
      if (!c.pass) {
        ++failed;
        if (first_failure.empty()) first_failure = r.instance.id + ":" + check_name;
      }
    }
  }
};

}  // namespace

int main() {
  // ---- criterion 1: the <2,3> pair, integer-exact -------------------------
  try {
    AnalysisResult ring = analyze_file("h4.json");
    AnalysisResult module = analyze_file("h4_m.json");
    bool ok = ring.base.e0 == 2 && ring.base.e1 == 1 && module.base.e1 == 0 &&
              ring.base.pn == 1 && module.base.pn == 0 && ring.base.graded.reg == 1 &&
              module.base.graded.reg == 0 && ring.base.graded.depth == 1 &&
              module.base.graded.depth == 1;
    report(1, "worked example over <2,3> (ring and module pair)", ok);
  } catch (const std::exception& e) {
    report(1, "worked example over <2,3> (ring and module pair)", false, e.what());
  }

  // ---- criterion 2: two-generated ideals, a = 3..6 ------------------------
  {
    bool ok = true;
    std::string detail;
    for (int a = 3; a <= 6 && ok; ++a) {
      try {
        AnalysisResult r = analyze_file("t3_a" + std::to_string(a) + ".json");
        const BoundEntry* eh = find_bound(r, "e1_module");
        ok = r.base.len_M_mod_IM == 2 && r.base.e0 == a &&
             r.base.e1 == binom(a, 2) - 1 && eh && eh->applicable && eh->equality &&
             r.base.closure_equals_maximal.value_or(false) &&
             r.base.square_equals_mI.value_or(false) && r.base.mu_I == 2 &&
             r.base.mu_m == 3 && r.base.graded.depth == 0;
        for (bool p : r.base.powers_equal_maximal) ok = ok && p;
        ok = ok && r.base.powers_equal_maximal.size() == 4;
        ok = ok && r.violations.empty();
        if (!ok) detail = "a = " + std::to_string(a);
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
    }
    report(2, "two-generated extremal ideals for a = 3..6", ok, detail);
  }

  // ---- criterion 3: maximal ideal of <a,...,2a-1>, a = 3..6 ---------------
  {
    bool ok = true;
    std::string detail;
    for (int a = 3; a <= 6 && ok; ++a) {
      try {
        AnalysisResult r = analyze_file("rv_sharp_a" + std::to_string(a) + ".json");
        const BoundEntry* rv = find_bound(r, "e1_gencount");
        ok = r.base.e1 == a - 1 && r.base.mu_m == a && rv && rv->applicable &&
             rv->equality && r.violations.empty();
        if (!ok) detail = "a = " + std::to_string(a);
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
    }
    report(3, "sharp generator-count instances for a = 3..6", ok, detail);
  }

  // ---- criterion 4: lifted two-generated ideals (d = 2) -------------------
  {
    bool ok = true;
    std::string detail;
    for (int a = 3; a <= 5 && ok; ++a) {
      try {
        AnalysisResult r = analyze_file("b2_lift_a" + std::to_string(a) + ".json");
        const BoundEntry* b1 = find_bound(r, "e2_cubic");
        const CharacterizationEntry* b2 = find_char(r, "e2_extremal");
        ok = r.lifted && r.lifted->d == 2 &&
             r.lifted->e2 == binom(r.lifted->e0 - r.lifted->b + 1, 3) && b1 &&
             b1->applicable && b1->equality && b2 && b2->applicable && b2->all_equivalent;
        if (ok) {
          for (const auto& [name, v] : b2->conditions) ok = ok && v;
        }
        ok = ok && r.violations.empty();
        if (!ok) detail = "a = " + std::to_string(a);
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
    }
    report(4, "second-coefficient equality after the dimension lift", ok, detail);
  }

  // ---- criteria 5-7 share the corpus plus a seeded sweep ------------------
  std::vector<AnalysisResult> all_results;
  bool sweep_built = true;
  std::string sweep_error;
  const std::vector<std::string> corpus = {
      "h4.json",          "h4_m.json",        "t3_a3.json",       "t3_a4.json",
      "t3_a5.json",       "t3_a6.json",       "rv_sharp_a3.json", "rv_sharp_a4.json",
      "rv_sharp_a5.json", "rv_sharp_a6.json", "b2_lift_a3.json",  "b2_lift_a4.json",
      "b2_lift_a5.json",  "h2_b2.json",       "param_regular.json",
      "param_regular_b3.json", "param_semigroup.json"};
  try {
    for (const auto& f : corpus) all_results.push_back(analyze_file(f));
    for (int i = 0; i < 200; ++i) {
      all_results.push_back(analyze_instance(random_instance(20240801, i, 6)));
    }
  } catch (const std::exception& e) {
    sweep_built = false;
    sweep_error = e.what();
  }

  // ---- criterion 5: soundness sweep ---------------------------------------
  {
    bool ok = sweep_built;
    std::string detail = sweep_error;
    const std::vector<std::string> entry_ids = {
        "e1_module",        "e1_module_strict", "e1_deep",
        "e1_gencount",      "e1_gencount_closure", "e1_mult_chain",
        "e1_embdim",        "e1_embdim_b1",     "e1_embdim_half",
        "e1_integral_closure", "e2_cubic",      "r_bound",
        "e2_vs_reduction",  "e2_linear",        "e2_embdim",
        "e2_nonneg"};
    long long applicable_count = 0;
    if (ok) {
      for (const auto& r : all_results) {
        if (!r.violations.empty()) {
          ok = false;
          detail = r.instance.id + ": " + r.violations.front();
          break;
        }
        if (!r.unconfirmed.empty()) {
          ok = false;
          detail = r.instance.id + ": unconfirmed " + r.unconfirmed.front();
          break;
        }
        for (const auto& id : entry_ids) {
          const BoundEntry* e = find_bound(r, id);
          if (e && e->applicable) {
            ++applicable_count;
            if (!e->holds) {
              ok = false;
              detail = r.instance.id + ": " + id;
            }
          }
        }
        if (!ok) break;
      }
    }
    std::ostringstream what;
    what << "soundness sweep, 217 instances, " << applicable_count
         << " applicable bound evaluations, zero violations";
    report(5, what.str(), ok, detail);
  }

  // ---- criterion 6: dual-route equalities ---------------------------------
  {
    Tally oracle, dual;
    if (sweep_built) {
      for (const auto& r : all_results) {
        oracle.add(r, "lengths_match_linear_algebra_oracle");
        dual.add(r, "coefficients_match_reduction_sums");
      }
    }
    const bool ok = sweep_built && oracle.failed == 0 && dual.failed == 0 &&
                    oracle.ran > 0 && dual.ran > 0;
    std::ostringstream what;
    what << "value-set lengths vs linear-algebra ranks (" << oracle.ran
         << " runs) and coefficient routes (" << dual.ran << " runs) agree";
    report(6, what.str(), ok,
           oracle.first_failure.empty() ? dual.first_failure : oracle.first_failure);
  }

  // ---- criterion 7: structural invariant suite ----------------------------
  {
    const std::vector<std::string> names = {
        "partial_sum_identity",
        "hilbert_function_bounded_by_e0",
        "e0_equals_min_ideal_valuation",
        "superficial_elements_realize_e0",
        "pn_le_e0_minus_b",
        "pn_le_e0_minus_b_minus_1",
        "border_case_filtered_hilbert_function",
        "strict_border_case_filtered_hilbert_function",
        "hilbert_function_linear_lower_bound",
        "hilbert_function_strict_linear_lower_bound",
        "filtered_degree_zero_at_least_b",
        "filtered_degree_zero_at_least_b_plus_1",
        "filtered_hilbert_function_strictly_increasing",
        "a0_below_a1",
        "h0_vanishes_at_pn",
        "polynomial_agreement_from_pn",
        "power_multiplicity_identity",
        "e2_nonnegative_via_lift",
        "lifted_equivalence_matches_base",
        "depth_one_numerator_matches_quotient_module",
        "product_values_contain_sums",
        "monomial_product_values_exact"};
    Tally t;
    if (sweep_built) {
      for (const auto& r : all_results) {
        for (const auto& n : names) t.add(r, n);
      }
    }
    const bool ok = sweep_built && t.failed == 0 && t.ran > 0;
    std::ostringstream what;
    what << "structural invariant suite, " << t.ran << " checks, zero failures";
    report(7, what.str(), ok, t.first_failure);
  }

  // ---- criterion 8: hypothesis-gate fidelity ------------------------------
  try {
    AnalysisResult r = analyze_file("h4_m.json");
    const CharacterizationEntry* h3 = find_char(r, "e1_extremal");
    bool ok = h3 && !h3->applicable && h3->conditions.size() == 4 &&
              h3->conditions[0].second && !h3->conditions[1].second &&
              !h3->conditions[2].second && !h3->conditions[3].second;
    report(8, "equivalence gate reported not-applicable with exactly one true condition",
           ok);
  } catch (const std::exception& e) {
    report(8, "equivalence gate reported not-applicable with exactly one true condition",
           false, e.what());
  }

  if (failures == 0) {
    std::cout << "all criteria passed" << std::endl;
  } else {
    std::cout << failures << " criterion(s) failed" << std::endl;
  }
  return failures;
}
