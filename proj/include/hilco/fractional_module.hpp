#pragma once

#include <deque>
#include <memory>
#include <vector>

#include "hilco/semigroup.hpp"
#include "hilco/series.hpp"
#include "hilco/standard_basis.hpp"
#include "hilco/value_set.hpp"

namespace hilco {

/// Finitely generated A-submodule of k[[t]] over A = k[[S]]. Covers ideals I,
/// the maximal ideal, modules M and all products I^n M. Frozen (standard basis
/// and value set computed) eagerly at construction; immutable afterwards, so
/// concurrent reads need no synchronization.
class FractionalModule {
 public:
  /// Throws ZeroModule when all generators vanish; generators must have
  /// nonnegative valuations.
  static FractionalModule generated_by(SemigroupPtr ring,
                                       std::vector<SeriesElement> generators);

  const NumericalSemigroup& ring() const { return *ring_; }
  const SemigroupPtr& ring_ptr() const { return ring_; }
  const std::vector<SeriesElement>& generators() const { return generators_; }
  const StandardBasis& basis() const { return basis_; }
  const ValueSet& values() const { return basis_.values; }
  int conductor() const { return basis_.values.conductor; }
  int min_valuation() const { return basis_.values.min(); }

  /// Small generating set extracted from the basis (pivots at valuations that
  /// no semigroup generator shift reaches); generates the module by Nakayama.
  const std::vector<SeriesElement>& small_generators() const { return small_generators_; }

 private:
  FractionalModule() = default;

  SemigroupPtr ring_;
  std::vector<SeriesElement> generators_;
  StandardBasis basis_;
  std::vector<SeriesElement> small_generators_;
};

/// The ring A itself, generated by 1.
FractionalModule module_ring(SemigroupPtr S);
/// The maximal ideal, generated by t^s over the minimal generators of S.
FractionalModule module_maximal_ideal(SemigroupPtr S);

FractionalModule module_sum(const FractionalModule& M, const FractionalModule& N);
FractionalModule module_product(const FractionalModule& M, const FractionalModule& N);
/// x * M for a single series element x.
FractionalModule module_scale(const SeriesElement& x, const FractionalModule& M);

/// Exact membership test (f must be an exact polynomial or truncated beyond
/// the module conductor).
bool membership(const SeriesElement& f, const FractionalModule& M);

/// N subset of M.
bool contains_module(const FractionalModule& M, const FractionalModule& N);

bool module_equal(const FractionalModule& M, const FractionalModule& N);

/// Length of M/N for N contained in M, counted as |v(M) \ v(N)|.
/// Throws NotContained when N is not a submodule of M.
long long length_quotient(const FractionalModule& M, const FractionalModule& N);

/// {f in ambient : f*J <= N} where J is given by its generators.
FractionalModule colon(const FractionalModule& N,
                       const std::vector<SeriesElement>& J_generators,
                       const FractionalModule& ambient);

FractionalModule module_intersect(const FractionalModule& X, const FractionalModule& Y);

/// l(A / integral closure of I) in the valuative realization:
/// |{s in S : s < min v(I)}|.
long long integral_closure_colength(const FractionalModule& I);

/// Memoized chain base, ideal*base, ideal^2*base, ...
/// Backed by a deque so that references returned earlier survive growth.
class PowerCache {
 public:
  PowerCache(FractionalModule ideal, FractionalModule base);
  const FractionalModule& at(int n);
  const FractionalModule& ideal() const { return ideal_; }

 private:
  FractionalModule ideal_;
  std::deque<FractionalModule> powers_;
};

}  // namespace hilco
