#include "hilco/linsolve.hpp"

#include <algorithm>

namespace hilco {

namespace {

// Column vectors of the shift family {t^s g_i} modulo t^T, in enumeration
// order (generators outer, shifts inner).
std::vector<std::vector<Rat>> shift_columns(const std::vector<SeriesElement>& generators,
                                            const NumericalSemigroup& S, int T) {
  std::vector<std::vector<Rat>> cols;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int vg = *g.valuation();
    for (int s : S.members_below(T - vg)) {
      std::vector<Rat> col(static_cast<size_t>(T), Rat(0));
      for (const auto& [e, c] : g.terms) {
        const long long shifted = static_cast<long long>(e) + s;
        if (shifted < T) col[static_cast<size_t>(shifted)] = c;
      }
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

}  // namespace

std::optional<std::vector<Rat>> truncated_solve(const SeriesElement& target,
                                                const std::vector<SeriesElement>& generators,
                                                const NumericalSemigroup& S, int T) {
  const auto cols = shift_columns(generators, S, T);
  const size_t m = static_cast<size_t>(T);
  const size_t n = cols.size();

  // Augmented elimination on [A | b], plain row-major pivot order.
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + 1, Rat(0)));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
  }
  for (const auto& [e, c] : target.terms) {
    if (e < T) a[static_cast<size_t>(e)][n] = c;
  }

  std::vector<size_t> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    const Rat inv = Rat(1) / a[row][col];
    for (size_t j = col; j <= n; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i != row && a[i][col] != 0) {
        const Rat f = a[i][col];
        for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
      }
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // Inconsistent when a zero row has nonzero rhs.
  for (size_t i = row; i < m; ++i) {
    if (a[i][n] != 0) return std::nullopt;
  }
  std::vector<Rat> solution(n, Rat(0));
  for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
    solution[pivot_col_of_row[i]] = a[i][n];
  }
  return solution;
}

long long truncated_rank(const std::vector<SeriesElement>& generators,
                         const NumericalSemigroup& S, int T) {
  auto cols = shift_columns(generators, S, T);
  // Eliminate columns against each other; pivot position = first nonzero row.
  std::vector<std::vector<Rat>> basis;  // reduced columns
  std::vector<size_t> pivot_pos;
  long long rank = 0;
  for (auto& col : cols) {
    for (size_t k = 0; k < basis.size(); ++k) {
      const Rat& c = col[pivot_pos[k]];
      if (c != 0) {
        const Rat f = c / basis[k][pivot_pos[k]];
        for (size_t i = pivot_pos[k]; i < col.size(); ++i) col[i] -= f * basis[k][i];
      }
    }
    size_t p = 0;
    while (p < col.size() && col[p] == 0) ++p;
    if (p == col.size()) continue;
    pivot_pos.push_back(p);
    basis.push_back(std::move(col));
    ++rank;
  }
  return rank;
}

long long oracle_length(const FractionalModule& M, const FractionalModule& N) {
  const int T = std::max(M.conductor(), N.conductor());
  const long long dim_M = truncated_rank(M.generators(), M.ring(), T);
  const long long dim_N = truncated_rank(N.generators(), N.ring(), T);
  return dim_M - dim_N;
}

std::vector<std::vector<Rat>> kernel_basis(const std::vector<std::vector<Rat>>& rows) {
  const size_t n = rows.size();
  std::vector<std::vector<Rat>> out;
  // Carry the combination through the elimination; a row that reduces to zero
  // yields a kernel vector.
  std::vector<std::vector<Rat>> reduced;
  std::vector<std::vector<Rat>> combos;
  std::vector<size_t> pivot_pos;
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rat> r = rows[i];
    std::vector<Rat> combo(n, Rat(0));
    combo[i] = 1;
    for (size_t k = 0; k < reduced.size(); ++k) {
      if (pivot_pos[k] < r.size() && r[pivot_pos[k]] != 0) {
        const Rat f = r[pivot_pos[k]] / reduced[k][pivot_pos[k]];
        for (size_t j = 0; j < r.size(); ++j) r[j] -= f * reduced[k][j];
        for (size_t j = 0; j < n; ++j) combo[j] -= f * combos[k][j];
      }
    }
    size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    if (p == r.size()) {
      out.push_back(std::move(combo));
    } else {
      pivot_pos.push_back(p);
      reduced.push_back(std::move(r));
      combos.push_back(std::move(combo));
    }
  }
  return out;
}

}  // namespace hilco
