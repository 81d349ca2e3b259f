#include "hilco/reductions.hpp"

#include <random>
#include <string>

#include "hilco/errors.hpp"

namespace hilco {

namespace {

long long draw_int(std::mt19937_64& rng, long long lo, long long hi) {
  // Portable deterministic draw; the slight modulo bias is irrelevant here.
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

bool verify_superficial(const SeriesElement& x, PowerCache& chain, int c,
                        int verified_to) {
  const std::vector<SeriesElement> J{x};
  for (int n = c; n <= verified_to; ++n) {
    // (I^{n+1}M : x) inside the ambient I^cM, compared with I^nM.
    FractionalModule E = colon(chain.at(n + 1), J, chain.at(c));
    if (E.values().count_difference(chain.at(n).values()) != 0) return false;
    if (!contains_module(chain.at(n), E)) return false;
  }
  return true;
}

SuperficialCertificate find_superficial(const FractionalModule& I, PowerCache& chain,
                                        int pn, long long b, int trials,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int c = pn;
  const int verified_to = pn + static_cast<int>(b) + 4;
  const int target_val = I.min_valuation();

  for (int trial = 0; trial < trials; ++trial) {
    const long long range = 3 + trial / 8;  // widen on persistent failure
    SeriesElement x = series_zero();
    for (const auto& g : I.generators()) {
      long long coeff = draw_int(rng, -range, range - 1);
      if (coeff >= 0) ++coeff;  // skip zero
      x = series_add(x, series_scale(g, Rat(coeff)));
    }
    if (!x.valuation() || *x.valuation() != target_val) continue;
    if (verify_superficial(x, chain, c, verified_to)) {
      SuperficialCertificate cert;
      cert.element = std::move(x);
      cert.c = c;
      cert.verified_to = verified_to;
      cert.trials_used = trial + 1;
      cert.seed = seed;
      return cert;
    }
  }
  throw SearchExhausted("no superficial element found in " + std::to_string(trials) +
                        " trials");
}

int reduction_number(const SeriesElement& x, PowerCache& chain, int n_cap) {
  const int vx = *x.valuation();
  for (int n = 0; n <= n_cap; ++n) {
    // x I^n M = I^{n+1} M iff the value sets agree (the containment holds and
    // scaling by x shifts the value set exactly).
    const ValueSet shifted = chain.at(n).values().shifted(vx);
    if (chain.at(n + 1).values().count_difference(shifted) == 0) return n;
  }
  throw ScanExhausted("no reduction number found below " + std::to_string(n_cap));
}

std::pair<long long, long long> e_from_reduction(const SeriesElement& x,
                                                 PowerCache& chain, int r) {
  const int vx = *x.valuation();
  long long e1 = 0;
  long long e2 = 0;
  for (int j = 0; j < r; ++j) {
    const ValueSet shifted = chain.at(j).values().shifted(vx);
    const long long len = chain.at(j + 1).values().count_difference(shifted);
    e1 += len;
    e2 += static_cast<long long>(j) * len;
  }
  return {e1, e2};
}

long long largest_b(PowerCache& chain, PowerCache& maximal_powers) {
  const FractionalModule& IM = chain.at(1);
  // IM in m^bM forces min v(IM) >= b * multiplicity + min v(M).
  const long long cap =
      (IM.min_valuation() - maximal_powers.at(0).min_valuation()) /
          maximal_powers.ideal().min_valuation() +
      1;
  long long b = 1;
  while (b + 1 <= cap &&
         contains_module(maximal_powers.at(static_cast<int>(b) + 1), IM)) {
    ++b;
  }
  return b;
}

long long minimal_generator_count(const FractionalModule& N,
                                  const FractionalModule& maximal_ideal) {
  return length_quotient(N, module_product(maximal_ideal, N));
}

}  // namespace hilco
