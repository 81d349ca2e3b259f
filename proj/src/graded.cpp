#include "hilco/graded.hpp"

#include <string>

#include "hilco/errors.hpp"

namespace hilco {

FractionalModule ratliff_rush(PowerCache& chain, PowerCache& ideal_powers, int n,
                              int l_max) {
  const FractionalModule& M = chain.at(0);
  FractionalModule current =
      colon(chain.at(n + 1), ideal_powers.at(1).small_generators(), M);
  for (int l = 1; l < l_max; ++l) {
    FractionalModule next =
        colon(chain.at(n + l + 1), ideal_powers.at(l + 1).small_generators(), M);
    if (module_equal(current, next)) return current;
    current = std::move(next);
  }
  throw NonStabilizing("colon chain for the closure of power " + std::to_string(n) +
                       " did not stabilize");
}

long long h0_piece(PowerCache& chain, PowerCache& ideal_powers, int n) {
  const FractionalModule closure = ratliff_rush(chain, ideal_powers, n + 1);
  const FractionalModule piece = module_intersect(closure, chain.at(n));
  return length_quotient(piece, chain.at(n + 1));
}

GradedInvariants graded_invariants(PowerCache& chain, PowerCache& ideal_powers,
                                   const HilbertData& hdata) {
  GradedInvariants g;
  g.d = 1;
  g.a1 = hdata.pn - 1;
  g.reg = hdata.pn;
  g.delta = 0;

  for (int n = 0; n <= hdata.pn; ++n) {
    g.h0_lengths.push_back(h0_piece(chain, ideal_powers, n));
    g.gbar_H.push_back(hdata.H[static_cast<size_t>(n)] - g.h0_lengths.back());
  }
  for (int n = hdata.pn; n >= 0; --n) {
    if (g.h0_lengths[static_cast<size_t>(n)] != 0) {
      g.a0 = n;
      break;
    }
  }
  if (g.a0 && *g.a0 >= g.a1) {
    throw InvariantViolation("a0 = " + std::to_string(*g.a0) +
                             " >= a1 = " + std::to_string(g.a1));
  }
  g.depth = g.a0 ? 0 : 1;
  return g;
}

GradedInvariants lift_graded(const GradedInvariants& g, int k) {
  GradedInvariants out = g;
  out.d += k;
  out.depth += k;
  if (out.a0) out.a0 = *out.a0 - k;
  out.a1 -= k;
  // reg = max(a_i + i) is unchanged by the shift.
  return out;
}

}  // namespace hilco
