#pragma once

#include <vector>

namespace hilco {

/// Cofinite set of nonnegative integers: finitely many sporadic members below
/// `conductor`, plus everything from `conductor` on. Backs every length
/// computation via valuation counting.
struct ValueSet {
  std::vector<int> sporadic;  // sorted, all strictly below conductor
  int conductor = 0;

  bool contains(int v) const;
  int min() const;  // smallest member

  /// Normalizes: members listed below `horizon`, all of [horizon, inf)
  /// included. Pulls the conductor down through contiguous members.
  static ValueSet normalized(std::vector<int> members_below_horizon, int horizon);

  /// Members in [0, bound), ascending.
  std::vector<int> members_below(int bound) const;

  /// |this \ other| — finite when other's conductor covers the tail of this.
  long long count_difference(const ValueSet& other) const;

  /// Set containment this <= other.
  bool subset_of(const ValueSet& other) const;

  ValueSet shifted(int s) const;

  /// Minkowski sum {a + b}.
  ValueSet sum(const ValueSet& other) const;

  bool operator==(const ValueSet& other) const {
    return sporadic == other.sporadic && conductor == other.conductor;
  }
};

}  // namespace hilco
