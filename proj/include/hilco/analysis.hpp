#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilco/bounds.hpp"
#include "hilco/fractional_module.hpp"
#include "hilco/reductions.hpp"
#include "hilco/semigroup.hpp"

namespace hilco {

struct AnalyzeOptions {
  int n_max = 64;
  int trials = 32;
  int samples = 8;
  std::uint64_t seed = 1;
  bool strict = false;
  bool run_oracles = true;
};

/// Parsed instance file: the semigroup, the ideal and module generators, the
/// requested dimension lift and the analysis options.
struct Instance {
  std::string id;
  std::vector<long long> semigroup;
  std::vector<SeriesElement> ideal_generators;
  bool module_is_ring = true;
  std::vector<SeriesElement> module_generators;
  int lift = 0;
  AnalyzeOptions options;
};

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);
Instance load_instance_file(const std::string& path);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AnalysisResult {
  Instance instance;
  InstanceInvariants base;
  std::optional<InstanceInvariants> lifted;
  std::vector<BoundEntry> bounds;
  std::vector<CharacterizationEntry> characterizations;
  std::vector<CheckResult> checks;
  std::vector<SuperficialCertificate> certificates;
  std::vector<std::string> violations;
  std::vector<std::string> unconfirmed;

  bool ok(bool strict) const {
    return violations.empty() && (!strict || unconfirmed.empty());
  }
};

/// Full pipeline: value sets, Hilbert data, graded invariants, superficial
/// certificates, reduction numbers, bound report, characterization report and
/// the structural check suite; plus the lifted evaluation when requested.
AnalysisResult analyze_instance(const Instance& inst);

/// Deterministic report document (sorted keys, exact numbers only).
nlohmann::json report_json(const AnalysisResult& r);

}  // namespace hilco
