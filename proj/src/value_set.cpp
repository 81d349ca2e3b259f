#include "hilco/value_set.hpp"

#include <algorithm>

namespace hilco {

bool ValueSet::contains(int v) const {
  if (v >= conductor) return true;
  return std::binary_search(sporadic.begin(), sporadic.end(), v);
}

int ValueSet::min() const {
  if (!sporadic.empty()) return sporadic.front();
  return conductor;
}

ValueSet ValueSet::normalized(std::vector<int> members, int horizon) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int conductor = horizon;
  while (!members.empty() && members.back() == conductor - 1) {
    members.pop_back();
    --conductor;
  }
  return ValueSet{std::move(members), conductor};
}

std::vector<int> ValueSet::members_below(int bound) const {
  std::vector<int> out;
  for (int v : sporadic) {
    if (v < bound) out.push_back(v);
  }
  for (int v = conductor; v < bound; ++v) out.push_back(v);
  return out;
}

long long ValueSet::count_difference(const ValueSet& other) const {
  long long count = 0;
  for (int v : members_below(other.conductor)) {
    if (!other.contains(v)) ++count;
  }
  return count;
}

bool ValueSet::subset_of(const ValueSet& other) const {
  if (conductor < other.conductor) {
    // Our tail starts earlier; everything in [conductor, other.conductor)
    // must be in the other set as well.
    for (int v = conductor; v < other.conductor; ++v) {
      if (!other.contains(v)) return false;
    }
  }
  for (int v : sporadic) {
    if (!other.contains(v)) return false;
  }
  return true;
}

ValueSet ValueSet::shifted(int s) const {
  ValueSet out = *this;
  for (int& v : out.sporadic) v += s;
  out.conductor += s;
  return out;
}

ValueSet ValueSet::sum(const ValueSet& other) const {
  // Everything at or beyond conductor + conductor' splits as x + y with both
  // factors past their conductors.
  const int horizon = conductor + other.conductor;
  std::vector<bool> hit(static_cast<size_t>(horizon) + 1, false);
  const auto a = members_below(horizon);
  const auto b = other.members_below(horizon);
  for (int x : a) {
    for (int y : b) {
      const long long s = static_cast<long long>(x) + y;
      if (s < horizon) hit[static_cast<size_t>(s)] = true;
    }
  }
  std::vector<int> members;
  for (int v = 0; v < horizon; ++v) {
    if (hit[static_cast<size_t>(v)]) members.push_back(v);
  }
  return normalized(std::move(members), horizon);
}

}  // namespace hilco
