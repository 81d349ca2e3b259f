#include "hilco/standard_basis.hpp"

#include <algorithm>
#include <string>

#include "hilco/errors.hpp"

namespace hilco {

StandardBasis standard_basis(const std::vector<SeriesElement>& generators,
                             const NumericalSemigroup& S, long long T) {
  int vmin = -1;
  int vmax = 0;
  for (const auto& g : generators) {
    if (auto v = g.valuation()) {
      if (vmin < 0 || *v < vmin) vmin = *v;
      vmax = std::max(vmax, *v);
    }
  }
  if (vmin < 0) throw ZeroModule("standard basis of the zero module");

  // Provable horizon: the minimal-valuation element shifts into every class
  // from vmin + conductor(S) on, so the value-set conductor is at most that.
  const long long cond_bound = vmin + S.conductor();
  const long long horizon = cond_bound + 1;
  if (T < 0) T = 4 * (S.conductor() + vmax + 8);
  if (T < horizon) {
    throw PrecisionExhausted("truncation order " + std::to_string(T) +
                             " below certified horizon " + std::to_string(horizon));
  }

  std::map<int, SeriesElement> pivots;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int vg = *g.valuation();
    for (int s : S.members_below(cond_bound - vg)) {
      SeriesElement w = series_truncate(series_shift(g, s), static_cast<int>(horizon));
      while (!w.is_zero()) {
        const int v = *w.valuation();
        if (v >= cond_bound) break;  // member tail, no new valuation
        auto it = pivots.find(v);
        if (it == pivots.end()) {
          pivots.emplace(v, series_monic(w));
          break;
        }
        w = series_sub(w, series_scale(it->second, w.leading_coefficient()));
      }
    }
  }

  std::vector<int> vals;
  vals.reserve(pivots.size());
  for (const auto& [v, p] : pivots) vals.push_back(v);
  ValueSet values = ValueSet::normalized(std::move(vals), static_cast<int>(cond_bound));

  // Pivots at or beyond the normalized conductor are redundant: absorption
  // covers them.
  for (auto it = pivots.begin(); it != pivots.end();) {
    if (it->first >= values.conductor) {
      it = pivots.erase(it);
    } else {
      ++it;
    }
  }

  StandardBasis out;
  out.pivots = std::move(pivots);
  out.values = std::move(values);
  out.certified_up_to = static_cast<int>(horizon);
  return out;
}

SeriesElement reduce(const SeriesElement& f, const StandardBasis& basis) {
  SeriesElement r = series_truncate(f, basis.certified_up_to);
  while (!r.is_zero()) {
    const int v = *r.valuation();
    if (v >= basis.values.conductor) {
      // The remainder lies in the module tail: f reduces to zero.
      return series_zero(r.truncation);
    }
    auto it = basis.pivots.find(v);
    if (it == basis.pivots.end()) return r;  // valuation not realizable
    r = series_sub(r, series_scale(it->second, r.leading_coefficient()));
  }
  return r;
}

bool is_member(const SeriesElement& f, const StandardBasis& basis) {
  if (f.truncation < basis.values.conductor) {
    throw PrecisionExhausted("membership needs coefficients up to the conductor");
  }
  return reduce(f, basis).is_zero();
}

std::vector<int> gap_coordinates(const StandardBasis& basis, int from_val) {
  std::vector<int> out;
  for (int v = from_val; v < basis.values.conductor; ++v) {
    if (!basis.values.contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<Rat> residue_vector(const SeriesElement& f, const StandardBasis& basis,
                                const std::vector<int>& gaps) {
  std::vector<Rat> out(gaps.size(), Rat(0));
  SeriesElement r = series_truncate(f, basis.certified_up_to);
  while (!r.is_zero()) {
    const int v = *r.valuation();
    if (v >= basis.values.conductor) break;  // absorbed tail
    auto it = basis.pivots.find(v);
    if (it != basis.pivots.end()) {
      r = series_sub(r, series_scale(it->second, r.leading_coefficient()));
      continue;
    }
    // Gap coordinate: record and strip.
    auto pos = std::lower_bound(gaps.begin(), gaps.end(), v);
    if (pos == gaps.end() || *pos != v) {
      throw MissingInvariant("residue coordinate " + std::to_string(v) +
                             " outside the supplied gap list");
    }
    out[static_cast<size_t>(pos - gaps.begin())] = r.leading_coefficient();
    r.terms.erase(r.terms.begin());
  }
  return out;
}

}  // namespace hilco
