#include "hilco/fractional_module.hpp"

#include <algorithm>
#include <string>

#include "hilco/errors.hpp"
#include "hilco/linsolve.hpp"

namespace hilco {

namespace {

// Exact member polynomial realizing valuation v: the basis pivot below the
// conductor, a plain monomial at or above it (tail absorption).
SeriesElement element_at(const StandardBasis& basis, int v) {
  auto it = basis.pivots.find(v);
  if (it != basis.pivots.end()) {
    SeriesElement out = it->second;
    out.truncation = SeriesElement::kExact;
    return out;
  }
  return series_monomial(v);
}

}  // namespace

FractionalModule FractionalModule::generated_by(SemigroupPtr ring,
                                                std::vector<SeriesElement> generators) {
  std::vector<SeriesElement> kept;
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (*g.valuation() < 0) {
      throw ParseError("module generators must have nonnegative valuations");
    }
    kept.push_back(std::move(g));
  }
  if (kept.empty()) throw ZeroModule("the zero module is not a valid instance");

  FractionalModule M;
  M.ring_ = std::move(ring);
  M.generators_ = std::move(kept);
  M.basis_ = standard_basis(M.generators_, *M.ring_);

  // Small generating set: pivots at valuations that no shift by a minimal
  // semigroup generator reaches from inside the value set (a superset of the
  // minimal generating valuations, hence generating by Nakayama).
  const ValueSet& V = M.basis_.values;
  const int window = static_cast<int>(M.ring_->multiplicity()) + V.conductor;
  for (int v : V.members_below(window)) {
    bool reachable = false;
    for (long long s : M.ring_->minimal_generators()) {
      if (v - s >= 0 && V.contains(static_cast<int>(v - s))) {
        reachable = true;
        break;
      }
    }
    if (!reachable) M.small_generators_.push_back(element_at(M.basis_, v));
  }
  return M;
}

FractionalModule module_ring(SemigroupPtr S) {
  return FractionalModule::generated_by(std::move(S), {series_monomial(0)});
}

FractionalModule module_maximal_ideal(SemigroupPtr S) {
  std::vector<SeriesElement> gens;
  for (long long s : S->minimal_generators()) {
    gens.push_back(series_monomial(static_cast<int>(s)));
  }
  return FractionalModule::generated_by(std::move(S), std::move(gens));
}

FractionalModule module_sum(const FractionalModule& M, const FractionalModule& N) {
  std::vector<SeriesElement> gens = M.small_generators();
  gens.insert(gens.end(), N.small_generators().begin(), N.small_generators().end());
  return FractionalModule::generated_by(M.ring_ptr(), std::move(gens));
}

FractionalModule module_product(const FractionalModule& M, const FractionalModule& N) {
  std::vector<SeriesElement> gens;
  gens.reserve(M.small_generators().size() * N.small_generators().size());
  for (const auto& a : M.small_generators()) {
    for (const auto& b : N.small_generators()) {
      gens.push_back(series_mul(a, b));
    }
  }
  return FractionalModule::generated_by(M.ring_ptr(), std::move(gens));
}

FractionalModule module_scale(const SeriesElement& x, const FractionalModule& M) {
  std::vector<SeriesElement> gens;
  gens.reserve(M.small_generators().size());
  for (const auto& g : M.small_generators()) gens.push_back(series_mul(x, g));
  return FractionalModule::generated_by(M.ring_ptr(), std::move(gens));
}

bool membership(const SeriesElement& f, const FractionalModule& M) {
  if (f.is_zero()) return true;
  return is_member(f, M.basis());
}

bool contains_module(const FractionalModule& M, const FractionalModule& N) {
  if (!N.values().subset_of(M.values())) return false;
  for (const auto& g : N.small_generators()) {
    if (!membership(g, M)) return false;
  }
  return true;
}

bool module_equal(const FractionalModule& M, const FractionalModule& N) {
  return M.values() == N.values() && contains_module(M, N) && contains_module(N, M);
}

long long length_quotient(const FractionalModule& M, const FractionalModule& N) {
  if (!contains_module(M, N)) {
    throw NotContained("length_quotient requires N contained in M");
  }
  return M.values().count_difference(N.values());
}

FractionalModule colon(const FractionalModule& N,
                       const std::vector<SeriesElement>& J_generators,
                       const FractionalModule& ambient) {
  int minvJ = -1;
  for (const auto& g : J_generators) {
    if (auto v = g.valuation()) {
      if (minvJ < 0 || *v < minvJ) minvJ = *v;
    }
  }
  if (minvJ < 0) throw ZeroModule("colon by the zero ideal");

  // Elements of the ambient module with valuation >= B multiply every J
  // generator past the conductor of N, hence into N.
  const int B = N.conductor() - minvJ;
  if (B <= ambient.min_valuation()) return ambient;

  std::vector<SeriesElement> rows;
  for (int v : ambient.values().members_below(B)) {
    rows.push_back(element_at(ambient.basis(), v));
  }

  // Refine the solution space one J generator at a time: keep the
  // combinations whose product residue vanishes modulo N.
  std::vector<SeriesElement> polys = std::move(rows);
  // Product residues can start at ambient.min + min v(J), possibly below the
  // lowest value of N.
  const int gap_from = std::min(N.min_valuation(), ambient.min_valuation() + minvJ);
  const std::vector<int> gaps = gap_coordinates(N.basis(), gap_from);
  for (const auto& gj : J_generators) {
    if (gj.is_zero()) continue;
    if (polys.empty()) break;
    std::vector<std::vector<Rat>> residues;
    residues.reserve(polys.size());
    for (const auto& p : polys) {
      residues.push_back(residue_vector(series_mul(p, gj), N.basis(), gaps));
    }
    std::vector<SeriesElement> next;
    for (const auto& combo : kernel_basis(residues)) {
      SeriesElement acc = series_zero();
      for (size_t i = 0; i < combo.size(); ++i) {
        if (combo[i] != 0) acc = series_add(acc, series_scale(polys[i], combo[i]));
      }
      if (!acc.is_zero()) next.push_back(std::move(acc));
    }
    polys = std::move(next);
  }

  // Tail of the colon: everything in the ambient module from valuation B on.
  for (int v : ambient.values().members_below(ambient.conductor())) {
    if (v >= B) polys.push_back(element_at(ambient.basis(), v));
  }
  const int tail_start = std::max(B, ambient.conductor());
  for (int v = tail_start; v <= tail_start + static_cast<int>(ambient.ring().conductor()); ++v) {
    polys.push_back(series_monomial(v));
  }
  return FractionalModule::generated_by(ambient.ring_ptr(), std::move(polys));
}

FractionalModule module_intersect(const FractionalModule& X, const FractionalModule& Y) {
  const int B = std::max(X.conductor(), Y.conductor());

  std::vector<SeriesElement> polys;
  for (int v : X.values().members_below(B)) {
    polys.push_back(element_at(X.basis(), v));
  }
  const std::vector<int> gaps = gap_coordinates(Y.basis(), std::min(X.min_valuation(), Y.min_valuation()));
  std::vector<std::vector<Rat>> residues;
  residues.reserve(polys.size());
  for (const auto& p : polys) {
    residues.push_back(residue_vector(p, Y.basis(), gaps));
  }
  std::vector<SeriesElement> gens;
  for (const auto& combo : kernel_basis(residues)) {
    SeriesElement acc = series_zero();
    for (size_t i = 0; i < combo.size(); ++i) {
      if (combo[i] != 0) acc = series_add(acc, series_scale(polys[i], combo[i]));
    }
    if (!acc.is_zero()) gens.push_back(std::move(acc));
  }
  // Valuations at or past B lie in both modules.
  for (int v = B; v <= B + static_cast<int>(X.ring().conductor()); ++v) {
    gens.push_back(series_monomial(v));
  }
  return FractionalModule::generated_by(X.ring_ptr(), std::move(gens));
}

long long integral_closure_colength(const FractionalModule& I) {
  const int e = I.min_valuation();
  long long count = 0;
  for (int s = 0; s < e; ++s) {
    if (I.ring().contains(s)) ++count;
  }
  return count;
}

PowerCache::PowerCache(FractionalModule ideal, FractionalModule base)
    : ideal_(std::move(ideal)) {
  powers_.push_back(std::move(base));
}

const FractionalModule& PowerCache::at(int n) {
  while (static_cast<int>(powers_.size()) <= n) {
    powers_.push_back(module_product(ideal_, powers_.back()));
  }
  return powers_[static_cast<size_t>(n)];
}

}  // namespace hilco
