#include <doctest.h>

#include <algorithm>
#include <random>

#include "hilco/errors.hpp"
#include "hilco/linsolve.hpp"
#include "hilco/semigroup.hpp"
#include "hilco/series.hpp"
#include "hilco/standard_basis.hpp"

using namespace hilco;

namespace {

SeriesElement mono(int e, long long num = 1, long long den = 1) {
  return series_monomial(e, Rat(num, den));
}

// Independent oracle: membership of the union of shifted semigroup ideals
// v_i + S below a horizon, by plain enumeration.
std::vector<int> brute_monomial_values(const std::vector<int>& vals,
                                       const NumericalSemigroup& S, int horizon) {
  std::vector<bool> hit(static_cast<size_t>(horizon), false);
  for (int v : vals) {
    for (int s : S.members_below(horizon - v)) hit[static_cast<size_t>(v + s)] = true;
  }
  std::vector<int> out;
  for (int n = 0; n < horizon; ++n) {
    if (hit[static_cast<size_t>(n)]) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("semigroup construction and gaps") {
  NumericalSemigroup S = NumericalSemigroup::from_generators({2, 3});
  CHECK(S.frobenius() == 1);
  CHECK(S.gaps() == std::vector<long long>{1});
  CHECK(S.conductor() == 2);
  CHECK(S.multiplicity() == 2);

  NumericalSemigroup T = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(T.frobenius() == 2);
  CHECK(T.gaps() == std::vector<long long>{1, 2});
  CHECK(T.minimal_generators() == std::vector<long long>{3, 4, 5});

  CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), NotCoprime);
}

TEST_CASE("semigroup with non-coprime smallest pair still certified") {
  // The two smallest generators share a factor; the conductor certificate
  // must not rely on their pairwise Frobenius number.
  NumericalSemigroup S = NumericalSemigroup::from_generators({6, 10, 15});
  CHECK(S.contains(6));
  CHECK(S.contains(25));
  CHECK(!S.contains(29));
  CHECK(S.frobenius() == 29);
}

TEST_CASE("membership") {
  NumericalSemigroup S = NumericalSemigroup::from_generators({2, 3});
  CHECK(!S.contains(1));
  CHECK(S.contains(5));
  CHECK(!S.contains(-4));
  NumericalSemigroup T = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(!T.contains(2));
}

TEST_CASE("multiplicity and basic inequalities") {
  for (auto gens : {std::vector<long long>{2, 3}, {3, 4, 5}, {5, 6, 7, 8, 9}, {4, 7, 9}}) {
    NumericalSemigroup S = NumericalSemigroup::from_generators(gens);
    CHECK(S.multiplicity() == gens.front());
    CHECK(S.genus() >= (S.frobenius() + 1) / 2);
    CHECK(S.multiplicity() <= S.conductor() + 1);
  }
}

TEST_CASE("apery sets") {
  NumericalSemigroup S = NumericalSemigroup::from_generators({2, 3});
  CHECK(S.apery_set(2) == std::vector<long long>{0, 3});
  NumericalSemigroup T = NumericalSemigroup::from_generators({3, 4, 5});
  CHECK(T.apery_set(3) == std::vector<long long>{0, 4, 5});
  CHECK_THROWS_AS(S.apery_set(1), NotMember);

  // m elements, distinct residues, all below m + frobenius + 1.
  for (long long m : {4LL, 6LL, 9LL, 10LL}) {
    NumericalSemigroup U = NumericalSemigroup::from_generators({4, 6, 9});
    if (!U.contains(m)) continue;
    auto ap = U.apery_set(m);
    CHECK(static_cast<long long>(ap.size()) == m);
    for (size_t r = 0; r < ap.size(); ++r) {
      CHECK(ap[r] % m == static_cast<long long>(r));
      CHECK(ap[r] < m + U.frobenius() + 1);
    }
  }
}

TEST_CASE("series arithmetic") {
  SeriesElement f = series_add(mono(3), mono(4));
  CHECK(f.terms.size() == 2);
  CHECK(series_sub(f, f).is_zero());
  SeriesElement g = series_mul(f, f);  // (t^3 + t^4)^2
  CHECK(g == series_from_terms({{6, Rat(1)}, {7, Rat(2)}, {8, Rat(1)}}));
  CHECK(series_shift(mono(3), 2) == mono(5));
  CHECK(series_monic(mono(4, 7)) == mono(4));
  SeriesElement h = series_truncate(g, 8);
  CHECK(h.truncation == 8);
  CHECK(h.terms.size() == 2);
}

TEST_CASE("reduce against a standard basis") {
  auto S = make_semigroup({3, 4, 5});

  StandardBasis b1 = standard_basis({mono(3)}, *S);
  SeriesElement r = reduce(series_add(mono(3), mono(4)), b1);
  CHECK(r == series_from_terms({{4, Rat(1)}}, r.truncation));

  StandardBasis b2 = standard_basis({series_add(mono(3), mono(4))}, *S);
  SeriesElement r2 = reduce(mono(3), b2);
  REQUIRE(!r2.is_zero());
  CHECK(*r2.valuation() == 4);
  CHECK(r2.leading_coefficient() == Rat(-1));

  // 2 t^6 = 2 t^3 * t^3 lies in the module.
  CHECK(reduce(mono(6, 2), b1).is_zero());
}

TEST_CASE("standard basis valuations match the worked examples") {
  auto S = make_semigroup({3, 4, 5});
  CHECK(standard_basis({mono(3), mono(4)}, *S).pivot_valuations() ==
        std::vector<int>{3, 4});
  // Cancellation reveals t^4.
  CHECK(standard_basis({series_add(mono(3), mono(4)), mono(3)}, *S).pivot_valuations() ==
        std::vector<int>{3, 4});
  auto S23 = make_semigroup({2, 3});
  CHECK(standard_basis({mono(2)}, *S23).pivot_valuations() == std::vector<int>{2});
}

TEST_CASE("standard basis against the enumeration oracle for monomial modules") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto S = trial % 2 ? make_semigroup({3, 4, 5}) : make_semigroup({4, 6, 9});
    std::vector<int> vals;
    std::vector<SeriesElement> gens;
    const int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) {
      const int v = static_cast<int>(rng() % 15);
      vals.push_back(v);
      gens.push_back(mono(v));
    }
    StandardBasis basis = standard_basis(gens, *S);
    const int horizon = basis.values.conductor + 5;
    CHECK(basis.values.members_below(horizon) ==
          brute_monomial_values(vals, *S, horizon));
  }
}

TEST_CASE("standard basis is independent of generator order") {
  auto S = make_semigroup({3, 4, 5});
  std::vector<SeriesElement> gens = {series_add(mono(3), mono(5)), mono(4),
                                     series_add(mono(6), mono(7, -2))};
  StandardBasis a = standard_basis(gens, *S);
  std::vector<SeriesElement> perm = {gens[2], gens[0], gens[1]};
  StandardBasis b = standard_basis(perm, *S);
  CHECK(a.values == b.values);
  for (const auto& [v, p] : a.pivots) {
    SeriesElement exact = p;
    exact.truncation = SeriesElement::kExact;
    CHECK(reduce(exact, b).is_zero());
  }
}

TEST_CASE("reduce is idempotent") {
  auto S = make_semigroup({3, 4, 5});
  StandardBasis basis = standard_basis({series_add(mono(3), mono(7)), mono(5)}, *S);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::pair<int, Rat>> terms;
    for (int i = 0; i < 4; ++i) {
      terms.emplace_back(static_cast<int>(rng() % 12),
                         Rat(static_cast<long long>(rng() % 7) - 3));
    }
    SeriesElement f = series_from_terms(terms);
    SeriesElement once = reduce(f, basis);
    CHECK(reduce(once, basis) == once);
  }
}

TEST_CASE("truncated solve") {
  auto S = make_semigroup({3, 4, 5});
  // t^9 = t^3 * t^6.
  auto sol = truncated_solve(mono(9), {mono(6), mono(7), mono(8)}, *S, 16);
  REQUIRE(sol.has_value());
  // 5 is not a value of (t^3, t^4).
  CHECK(!truncated_solve(mono(5), {mono(3), mono(4)}, *S, 16).has_value());
  auto zero = truncated_solve(series_zero(), {mono(3), mono(4)}, *S, 16);
  REQUIRE(zero.has_value());
  for (const auto& c : *zero) CHECK(c == 0);
}

TEST_CASE("doubling the working order does not change certified value sets") {
  auto S = make_semigroup({3, 4, 5});
  std::vector<SeriesElement> gens = {series_add(mono(3), mono(4)), mono(7)};
  StandardBasis a = standard_basis(gens, *S);
  StandardBasis b = standard_basis(gens, *S, 2L * a.certified_up_to);
  CHECK(a.values == b.values);
  CHECK_THROWS_AS(standard_basis(gens, *S, 3), PrecisionExhausted);
}
