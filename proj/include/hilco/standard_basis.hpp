#pragma once

#include <map>
#include <vector>

#include "hilco/semigroup.hpp"
#include "hilco/series.hpp"
#include "hilco/value_set.hpp"

namespace hilco {

/// Valuation-echelon basis of an A-submodule of k[[t]]: one monic element per
/// valuation below the value-set conductor. Every series with valuation at or
/// beyond the conductor already lies in the module (tail absorption), so the
/// finitely many pivots determine membership exactly.
struct StandardBasis {
  std::map<int, SeriesElement> pivots;  // valuation -> monic element
  ValueSet values;
  int certified_up_to = 0;  // working horizon of the completion

  std::vector<int> pivot_valuations() const {
    std::vector<int> out;
    out.reserve(pivots.size());
    for (const auto& [v, p] : pivots) out.push_back(v);
    return out;
  }
};

/// Completes `generators` to a standard basis by Gaussian elimination ordered
/// by t-valuation. T < 0 selects the default working order
/// 4 * (conductor(S) + max generator valuation + 8); passing a smaller T than
/// the certified horizon needs raises PrecisionExhausted (callers retry with
/// 2T). All pivot discovery happens below min-valuation + conductor(S), which
/// provably bounds the conductor of the value set.
StandardBasis standard_basis(const std::vector<SeriesElement>& generators,
                             const NumericalSemigroup& S, long long T = -1);

/// Cancels lowest terms of f against basis pivots until the remainder is
/// zero-mod-t^T, absorbed by the module tail, or has a valuation missing from
/// the value set. Deterministic; idempotent.
SeriesElement reduce(const SeriesElement& f, const StandardBasis& basis);

bool is_member(const SeriesElement& f, const StandardBasis& basis);

/// Gap coordinates of the quotient k[[t]]/module below the conductor, from
/// `from_val` upward.
std::vector<int> gap_coordinates(const StandardBasis& basis, int from_val = 0);

/// Canonical residue of f modulo the module, expressed on `gaps` (which must
/// come from gap_coordinates with from_val at or below valuation(f)). Linear
/// in f; the zero vector certifies membership.
std::vector<Rat> residue_vector(const SeriesElement& f, const StandardBasis& basis,
                                const std::vector<int>& gaps);

}  // namespace hilco
