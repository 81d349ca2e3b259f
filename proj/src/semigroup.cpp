#include "hilco/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hilco/errors.hpp"

namespace hilco {

namespace {

// Sieve reachability of [0, bound) from the generators.
std::vector<bool> sieve(const std::vector<long long>& gens, long long bound) {
  std::vector<bool> reach(static_cast<size_t>(bound), false);
  reach[0] = true;
  for (long long n = 1; n < bound; ++n) {
    for (long long g : gens) {
      if (n >= g && reach[static_cast<size_t>(n - g)]) {
        reach[static_cast<size_t>(n)] = true;
        break;
      }
    }
  }
  return reach;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<long long> gens) {
  if (gens.empty()) throw ParseError("semigroup needs at least one generator");
  for (long long g : gens) {
    if (g < 1) throw ParseError("semigroup generators must be positive");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  long long g = 0;
  for (long long v : gens) g = std::gcd(g, v);
  if (g != 1) {
    throw NotCoprime("gcd of semigroup generators is " + std::to_string(g));
  }

  NumericalSemigroup S;
  S.generators_ = gens;
  S.multiplicity_ = gens.front();

  // Start bound: product of the two smallest generators, then certify the
  // conductor by finding a full run of `multiplicity` consecutive members.
  long long bound = gens.size() >= 2 ? gens[0] * gens[1] : gens[0];
  bound = std::max<long long>(bound, S.multiplicity_ + 2);
  long long conductor = -1;
  std::vector<bool> reach;
  for (int attempt = 0; attempt < 24; ++attempt) {
    reach = sieve(gens, bound + S.multiplicity_ + 1);
    for (long long x = 0; x + S.multiplicity_ <= bound; ++x) {
      bool run = true;
      for (long long i = 0; i < S.multiplicity_; ++i) {
        if (!reach[static_cast<size_t>(x + i)]) {
          run = false;
          break;
        }
      }
      if (run) {
        conductor = x;
        break;
      }
    }
    if (conductor >= 0) break;
    bound *= 2;
  }
  if (conductor < 0) {
    throw PrecisionExhausted("no conductor certificate found for semigroup");
  }
  // Trim: the true conductor is one past the largest gap.
  long long frob = -1;
  for (long long n = conductor - 1; n >= 0; --n) {
    if (!reach[static_cast<size_t>(n)]) {
      frob = n;
      break;
    }
  }
  S.frobenius_ = frob;
  const long long cond = frob + 1;
  S.member_below_conductor_.assign(static_cast<size_t>(cond), false);
  for (long long n = 0; n < cond; ++n) {
    S.member_below_conductor_[static_cast<size_t>(n)] = reach[static_cast<size_t>(n)];
    if (!reach[static_cast<size_t>(n)]) S.gaps_.push_back(n);
  }

  // Minimal generators: nonzero members not expressible as a sum of two
  // nonzero members. All lie in [multiplicity, conductor + multiplicity].
  for (long long m = 1; m <= cond + S.multiplicity_; ++m) {
    if (!S.contains(m)) continue;
    bool decomposable = false;
    for (long long a = 1; a <= m - 1; ++a) {
      if (S.contains(a) && S.contains(m - a) && m - a >= 1) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) S.minimal_generators_.push_back(m);
  }
  return S;
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) return false;
  if (n >= conductor()) return true;
  return member_below_conductor_[static_cast<size_t>(n)];
}

std::vector<long long> NumericalSemigroup::apery_set(long long m) const {
  if (m <= 0 || !contains(m)) {
    throw NotMember("apery base must be a nonzero element of the semigroup");
  }
  std::vector<long long> out(static_cast<size_t>(m));
  for (long long r = 0; r < m; ++r) {
    long long n = r;
    while (!contains(n)) n += m;
    out[static_cast<size_t>(r)] = n;
  }
  return out;
}

std::vector<int> NumericalSemigroup::members_below(long long bound) const {
  std::vector<int> out;
  for (long long n = 0; n < bound; ++n) {
    if (contains(n)) out.push_back(static_cast<int>(n));
  }
  return out;
}

SemigroupPtr make_semigroup(std::vector<long long> gens) {
  return std::make_shared<const NumericalSemigroup>(
      NumericalSemigroup::from_generators(std::move(gens)));
}

}  // namespace hilco
