#pragma once

#include <optional>
#include <vector>

#include "hilco/fractional_module.hpp"
#include "hilco/hilbert.hpp"

namespace hilco {

/// Invariants of the associated graded module G_I(M): a-invariants, regularity,
/// depth and the graded pieces of the degree-zero local cohomology. a0 absent
/// means minus infinity. For d = 1 the identities a1 = pn - 1, reg = pn hold;
/// lifts shift a-invariants and add to depth.
struct GradedInvariants {
  int d = 1;
  std::optional<int> a0;   // nullopt = minus infinity
  int a1 = 0;              // top a-invariant a_d
  int reg = 0;
  int depth = 0;
  std::vector<long long> h0_lengths;  // degree 0..pn pieces of H^0
  std::vector<long long> gbar_H;      // Hilbert function of G/H^0, degree 0..pn
  int delta = 0;                      // maximal generating degree of G_I(M)
};

/// Stable value of the colon chain (I^{n+l} M : I^l) inside M, l = 1, 2, ...
/// Two consecutive coincident values certify stabilization; exceeding l_max
/// raises NonStabilizing.
FractionalModule ratliff_rush(PowerCache& chain, PowerCache& ideal_powers, int n,
                              int l_max = 12);

/// l((~(I^{n+1}M) ∩ I^n M) / I^{n+1} M), the degree-n piece of H^0.
long long h0_piece(PowerCache& chain, PowerCache& ideal_powers, int n);

/// Assembles the d = 1 graded invariants from the Hilbert data and the H^0
/// pieces. Raises InvariantViolation if a0 >= a1 is ever observed.
GradedInvariants graded_invariants(PowerCache& chain, PowerCache& ideal_powers,
                                   const HilbertData& hdata);

/// Polynomial-extension lift: depth += k, reg unchanged, a_{i+k} = a_i - k.
GradedInvariants lift_graded(const GradedInvariants& g, int k);

}  // namespace hilco
