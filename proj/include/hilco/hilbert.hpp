#pragma once

#include <array>
#include <vector>

#include "hilco/fractional_module.hpp"

namespace hilco {

/// Hilbert data of a pair (I, M): function values H(n) = l(I^n M / I^{n+1} M),
/// series numerator Q (P(z) = Q(z)/(1-z)^d), postulation number and the first
/// three normalized coefficients e_0, e_1, e_2.
struct HilbertData {
  int d = 1;
  std::vector<long long> H;  // H(0..), at least up to pn + stabilization window
  std::vector<long long> Q;  // numerator coefficients, degree = pn at d = 1
  int pn = 0;                // first index of permanent agreement with the polynomial
  std::array<long long, 3> e{0, 0, 0};
};

long long hilbert_function(PowerCache& chain, int n);

/// l(M / I^{n+1} M).
long long hilbert_samuel(PowerCache& chain, int n);

/// i-th derivative of Q at 1 divided by i!:  sum_j C(j, i) Q_j.
long long hilbert_coefficient(const std::vector<long long>& Q, int i);

/// Computes H until it stays at its limit over a window of width max(4, b+2),
/// then differences it into Q and evaluates e_0..e_2. The limit must equal
/// min v(I); failure to stabilize below the cap raises NonStabilizing.
HilbertData hilbert_numerator(PowerCache& chain, long long b, int n_max = 64);

/// Formal dimension lift by k: Q and all e_i unchanged, d grows by k, H is
/// replaced by k-fold partial sums, pn drops by k.
HilbertData lift_hilbert(const HilbertData& data, int k);

}  // namespace hilco
