#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hilco/fractional_module.hpp"
#include "hilco/series.hpp"

namespace hilco {

/// A verified superficial element for (I, M): valuation equal to min v(I) and
/// (I^{n+1}M : x) ∩ I^cM = I^nM checked for c <= n <= verified_to. The window
/// is finite; reports always carry it instead of claiming the full condition.
struct SuperficialCertificate {
  SeriesElement element;
  int c = 0;
  int verified_to = 0;
  int trials_used = 0;
  std::uint64_t seed = 0;
};

/// Checks the superficiality condition for a concrete x over the window
/// [c, verified_to].
bool verify_superficial(const SeriesElement& x, PowerCache& chain, int c,
                        int verified_to);

/// Random search over small-integer combinations of the generators of I;
/// coefficient range widens as trials accumulate. Throws SearchExhausted after
/// `trials` failures.
SuperficialCertificate find_superficial(const FractionalModule& I, PowerCache& chain,
                                        int pn, long long b, int trials,
                                        std::uint64_t seed);

/// r_(x)(I, M): least n with I^{n+1} M = x I^n M. Throws ScanExhausted beyond
/// the cap.
int reduction_number(const SeriesElement& x, PowerCache& chain, int n_cap);

/// e_1 = sum_{j<r} l(I^{j+1}M / x I^j M), e_2 = sum_{j<r} j * l(...).
std::pair<long long, long long> e_from_reduction(const SeriesElement& x,
                                                 PowerCache& chain, int r);

/// Largest b >= 1 with I M contained in m^b M.
long long largest_b(PowerCache& chain, PowerCache& maximal_powers);

/// Minimal number of generators l(N / m N).
long long minimal_generator_count(const FractionalModule& N,
                                  const FractionalModule& maximal_ideal);

}  // namespace hilco
