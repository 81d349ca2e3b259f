#pragma once

#include <memory>
#include <vector>

namespace hilco {

/// A numerical semigroup S = <s_1,...,s_k> with gcd 1: membership, gaps,
/// Frobenius number and Apery sets. Immutable after construction; safe to
/// share across threads.
class NumericalSemigroup {
 public:
  /// Builds S from positive generators. Throws NotCoprime when gcd != 1.
  static NumericalSemigroup from_generators(std::vector<long long> gens);

  bool contains(long long n) const;

  /// Smallest nonzero element of S.
  long long multiplicity() const { return multiplicity_; }

  /// Largest integer not in S; -1 when S is all of N.
  long long frobenius() const { return frobenius_; }

  /// frobenius + 1: every n >= conductor lies in S.
  long long conductor() const { return frobenius_ + 1; }

  const std::vector<long long>& gaps() const { return gaps_; }

  long long genus() const { return static_cast<long long>(gaps_.size()); }

  const std::vector<long long>& generators() const { return generators_; }

  /// Generators that are not sums of two nonzero elements of S.
  const std::vector<long long>& minimal_generators() const { return minimal_generators_; }

  /// Least element of S in each residue class mod m. Throws NotMember when
  /// m is not a nonzero element of S.
  std::vector<long long> apery_set(long long m) const;

  /// Members of S in [0, bound), ascending.
  std::vector<int> members_below(long long bound) const;

  bool operator==(const NumericalSemigroup& other) const {
    return gaps_ == other.gaps_ && frobenius_ == other.frobenius_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<long long> generators_;
  std::vector<long long> gaps_;
  std::vector<bool> member_below_conductor_;  // membership on [0, conductor)
  long long frobenius_ = -1;
  long long multiplicity_ = 1;
  std::vector<long long> minimal_generators_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr make_semigroup(std::vector<long long> gens);

}  // namespace hilco
