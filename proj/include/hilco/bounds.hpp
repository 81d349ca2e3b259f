#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilco/graded.hpp"
#include "hilco/hilbert.hpp"
#include "hilco/rational.hpp"

namespace hilco {

/// Everything a fully analyzed instance knows about itself; inputs of every
/// bound and characterization. Ring-only fields stay empty for module
/// instances. For lifted invariants (d > 1), graded.a0/a1 hold the two top
/// a-invariants a_{d-1} and a_d.
struct InstanceInvariants {
  int d = 1;
  bool ring_case = false;
  long long b = 1;  // largest b with IM in m^b M
  long long e0 = 0, e1 = 0, e2 = 0;
  long long len_M_mod_IM = 0;
  long long mu_I = 0, mu_m = 0, mu_M = 0;
  long long e0_m = 0, e1_m = 0;  // e_i(m, M)
  long long e0_mb = 0;           // e_0(m^b, M)
  int pn = 0;
  HilbertData hilbert;
  GradedInvariants graded;

  std::optional<long long> r_sampled;  // min over certified reduction numbers
  std::vector<int> r_values;           // per certificate

  // Ring case only.
  std::optional<long long> len_A_mod_closure;  // l(A / ~I)
  std::optional<long long> mu_closure;         // mu(~I)
  std::optional<long long> integral_colength;  // l(A / integral closure of I)
  std::optional<bool> closure_equals_maximal;  // ~I = m
  std::optional<bool> square_equals_mI;        // I^2 = mI
  std::optional<bool> ideal_equals_maximal;    // I = m
  std::vector<bool> powers_equal_maximal;      // I^n = m^n for n = 2..5
};

/// One inequality of the report: holds means lhs <= rhs exactly, equality
/// means lhs == rhs. Entries that are not applicable carry the reason and no
/// verdict.
struct BoundEntry {
  std::string id;
  std::string statement;
  bool applicable = false;
  std::string reason;
  Rat lhs = 0;
  Rat rhs = 0;
  bool holds = false;
  bool equality = false;
  std::string note;
};

/// An equivalence (or conclusion list) of the report. Conditions are always
/// evaluated; all_equivalent is asserted only when the hypothesis gate holds.
struct CharacterizationEntry {
  std::string id;
  std::string statement;
  bool applicable = false;
  std::string reason;
  std::vector<std::pair<std::string, bool>> conditions;
  bool all_equivalent = false;
  std::vector<std::pair<std::string, bool>> consequences;
};

std::vector<BoundEntry> evaluate_bounds(const InstanceInvariants& inv);
std::vector<CharacterizationEntry> evaluate_characterizations(const InstanceInvariants& inv);

/// Formal dimension lift: adjoining k analytically independent variables to
/// the ring and the ideal. e_i, b and all lengths survive; generator counts
/// and d grow by k; graded data shifts per lift_graded.
InstanceInvariants lift_instance(const InstanceInvariants& inv, int k);

/// Numerator shape l + (b+1-l) z + z^2 + ... + z^{e0-b} compared exactly,
/// degree included.
bool matches_extremal_numerator(const InstanceInvariants& inv);
/// Numerator shape l + (b+2-l) z + z^2 + ... + z^{e0-b-1}.
bool matches_strict_extremal_numerator(const InstanceInvariants& inv);

/// lhs of the main first-coefficient bound: C(e0-b+1,2) + b - l(M/IM).
long long extremal_e1_value(const InstanceInvariants& inv);

}  // namespace hilco
