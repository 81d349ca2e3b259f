#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilco/analysis.hpp"

namespace hilco {

struct SearchOptions {
  int count = 50;
  std::uint64_t seed = 1;
  long long genus_max = 6;
  std::string output_dir;  // empty: no files written
  bool strict = false;
  int jobs = 1;
  // Optional per-instance option overrides (negative: keep generated values).
  int n_max = -1;
  int trials = -1;
  int samples = -1;
};

struct SearchOutcome {
  nlohmann::json summary;
  std::vector<std::string> violating_instances;
  std::vector<std::string> unconfirmed_instances;
  bool ok(bool strict) const {
    return violating_instances.empty() && (!strict || unconfirmed_instances.empty());
  }
};

/// Deterministic random instance: a semigroup of genus at most genus_max, an
/// m-primary monomial/binomial ideal, a random fractional module, lift 1.
Instance random_instance(std::uint64_t seed, int index, long long genus_max);

/// Analyzes `count` random instances, aggregates violations, equality cases
/// and near misses. Deterministic for fixed options; the per-instance work
/// fans out over `jobs` workers with index-ordered aggregation.
SearchOutcome run_search(const SearchOptions& options);

}  // namespace hilco
