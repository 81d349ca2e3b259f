#pragma once

#include <optional>
#include <vector>

#include "hilco/fractional_module.hpp"
#include "hilco/semigroup.hpp"
#include "hilco/series.hpp"

namespace hilco {

/// Exact solution of target = sum c_{i,s} t^s g_i over the shifts
/// {t^s g_i : s in S, s + val(g_i) < T}, modulo t^T. Returns the coefficients
/// (indexed by the enumerated shift list) or nullopt when no solution exists.
/// Independent of the standard-basis machinery; serves as its oracle.
std::optional<std::vector<Rat>> truncated_solve(const SeriesElement& target,
                                                const std::vector<SeriesElement>& generators,
                                                const NumericalSemigroup& S, int T);

/// Dimension of the span of the shift family above inside k[t]/t^T.
long long truncated_rank(const std::vector<SeriesElement>& generators,
                         const NumericalSemigroup& S, int T);

/// Length of M/N recomputed as a rank difference of truncated spans built
/// from the original generators (cross-check for the value-set count).
long long oracle_length(const FractionalModule& M, const FractionalModule& N);

/// Basis of {c : sum_i c_i rows[i] = 0} for exact rational row vectors.
std::vector<std::vector<Rat>> kernel_basis(const std::vector<std::vector<Rat>>& rows);

}  // namespace hilco
