#include "hilco/search.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "hilco/errors.hpp"

namespace hilco {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (salt + 0x51ULL));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

std::vector<long long> random_semigroup_gens(std::mt19937_64& rng, long long genus_max) {
  if (genus_max <= 0) return {1};
  for (int attempt = 0; attempt < 64; ++attempt) {
    const long long k = draw(rng, 2, 4);
    std::vector<long long> gens;
    for (long long i = 0; i < k; ++i) gens.push_back(draw(rng, 2, 3 + 2 * genus_max));
    long long g = 0;
    for (long long v : gens) g = std::gcd(g, v);
    if (g != 1) continue;
    try {
      NumericalSemigroup S = NumericalSemigroup::from_generators(gens);
      if (S.genus() <= genus_max) return gens;
    } catch (const NotCoprime&) {
      continue;
    }
  }
  return {1};
}

// A random element of the semigroup ring with valuation in the window; a
// monomial most of the time, otherwise a binomial.
SeriesElement random_ring_element(std::mt19937_64& rng, const NumericalSemigroup& S,
                                  long long vmin, long long vmax) {
  std::vector<int> pool;
  for (int v : S.members_below(vmax + 1)) {
    if (v >= vmin) pool.push_back(v);
  }
  const int v = pool[static_cast<size_t>(draw(rng, 0, static_cast<long long>(pool.size()) - 1))];
  SeriesElement out = series_monomial(v);
  if (draw(rng, 0, 2) == 0) {
    std::vector<int> higher;
    for (int w : S.members_below(v + S.conductor() + 5)) {
      if (w > v) higher.push_back(w);
    }
    if (!higher.empty()) {
      const int w =
          higher[static_cast<size_t>(draw(rng, 0, static_cast<long long>(higher.size()) - 1))];
      long long c = draw(rng, -3, 2);
      if (c >= 0) ++c;
      out = series_add(out, series_monomial(w, Rat(c)));
    }
  }
  return out;
}

}  // namespace

Instance random_instance(std::uint64_t seed, int index, long long genus_max) {
  std::mt19937_64 rng(mix(seed, static_cast<std::uint64_t>(index)));
  Instance inst;
  inst.id = "rnd-" + std::to_string(seed) + "-" + std::to_string(index);

  inst.semigroup = random_semigroup_gens(rng, genus_max);
  NumericalSemigroup S = NumericalSemigroup::from_generators(inst.semigroup);
  const long long mult = S.multiplicity();
  const long long cond = S.conductor();

  if (draw(rng, 0, 3) == 0) {
    // The maximal ideal itself: the natural sharpness witness for several
    // bounds.
    for (long long s : S.minimal_generators()) {
      inst.ideal_generators.push_back(series_monomial(static_cast<int>(s)));
    }
  } else {
    const long long ngens = draw(rng, 1, 3);
    const long long vmax = std::min<long long>(mult + cond + 2, 12);
    for (long long i = 0; i < ngens; ++i) {
      inst.ideal_generators.push_back(
          random_ring_element(rng, S, std::max<long long>(1, mult), std::max(vmax, mult)));
    }
  }

  if (draw(rng, 0, 1) == 0) {
    inst.module_is_ring = true;
  } else {
    inst.module_is_ring = false;
    const long long ngens = draw(rng, 1, 3);
    for (long long i = 0; i < ngens; ++i) {
      const int v = static_cast<int>(draw(rng, 0, cond + 3));
      SeriesElement g = series_monomial(v);
      if (draw(rng, 0, 2) == 0) {
        const int w = static_cast<int>(v + draw(rng, 1, cond + 2));
        long long c = draw(rng, -3, 2);
        if (c >= 0) ++c;
        g = series_add(g, series_monomial(w, Rat(c, draw(rng, 1, 2))));
      }
      inst.module_generators.push_back(std::move(g));
    }
  }

  inst.lift = 1;
  inst.options.samples = 3;
  inst.options.trials = 24;
  inst.options.seed = mix(seed, 0xABCDULL + static_cast<std::uint64_t>(index));
  return inst;
}

SearchOutcome run_search(const SearchOptions& options) {
  struct Row {
    Instance instance;
    nlohmann::json brief;
    nlohmann::json repro;  // written out on violation
    bool violated = false;
    bool unconfirmed = false;
  };
  std::vector<Row> rows(static_cast<size_t>(options.count));

  std::map<std::string, long long> equality_counts;
  struct NearMiss {
    Rat gap;
    std::string entry;
    std::string instance;
  };
  std::vector<NearMiss> near_misses;

  auto analyze_row = [&](int i) {
    Row& row = rows[static_cast<size_t>(i)];
    row.instance = random_instance(options.seed, i, options.genus_max);
    if (options.n_max >= 0) row.instance.options.n_max = options.n_max;
    if (options.trials >= 0) row.instance.options.trials = options.trials;
    if (options.samples >= 0) row.instance.options.samples = options.samples;
    nlohmann::json brief;
    brief["id"] = row.instance.id;
    try {
      AnalysisResult res = analyze_instance(row.instance);
      brief["e0"] = res.base.e0;
      brief["e1"] = res.base.e1;
      brief["e2"] = res.base.e2;
      brief["b"] = res.base.b;
      brief["pn"] = res.base.pn;
      brief["status"] = !res.violations.empty()
                            ? "violation"
                            : (!res.unconfirmed.empty() ? "unconfirmed" : "ok");
      row.violated = !res.violations.empty();
      row.unconfirmed = !res.unconfirmed.empty();
      if (row.violated) {
        nlohmann::json repro;
        repro["instance"] = instance_to_json(row.instance);
        repro["violations"] = res.violations;
        row.repro = std::move(repro);
      }
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& e : res.bounds) {
        if (!e.applicable) continue;
        nlohmann::json ej;
        ej["id"] = e.id;
        ej["equality"] = e.equality;
        ej["gap"] = rat_to_string(e.rhs - e.lhs);
        entries.push_back(ej);
      }
      brief["entries"] = entries;
    } catch (const std::exception& e) {
      brief["status"] = "error";
      brief["error"] = e.what();
      row.violated = true;
      nlohmann::json repro;
      repro["instance"] = instance_to_json(row.instance);
      repro["violations"] = nlohmann::json::array({std::string("exception: ") + e.what()});
      row.repro = std::move(repro);
    }
    row.brief = std::move(brief);
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (int i = 0; i < options.count; ++i) analyze_row(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&]() {
        for (int i = next.fetch_add(1); i < options.count; i = next.fetch_add(1)) {
          analyze_row(i);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  SearchOutcome outcome;
  nlohmann::json instances = nlohmann::json::array();
  for (const auto& row : rows) {
    instances.push_back(row.brief);
    if (row.violated) outcome.violating_instances.push_back(row.instance.id);
    if (row.unconfirmed) outcome.unconfirmed_instances.push_back(row.instance.id);
    if (row.brief.contains("entries")) {
      for (const auto& e : row.brief["entries"]) {
        if (e["equality"].get<bool>()) {
          equality_counts[e["id"].get<std::string>()]++;
        } else {
          near_misses.push_back(NearMiss{Rat(e["gap"].get<std::string>()),
                                         e["id"].get<std::string>(),
                                         row.instance.id});
        }
      }
    }
  }

  std::stable_sort(near_misses.begin(), near_misses.end(),
                   [](const NearMiss& a, const NearMiss& b) { return a.gap < b.gap; });
  nlohmann::json near = nlohmann::json::array();
  for (size_t i = 0; i < near_misses.size() && i < 10; ++i) {
    near.push_back({{"gap", rat_to_string(near_misses[i].gap)},
                    {"entry", near_misses[i].entry},
                    {"instance", near_misses[i].instance}});
  }

  nlohmann::json counts;
  for (const auto& [id, n] : equality_counts) counts[id] = n;

  nlohmann::json summary;
  summary["count"] = options.count;
  summary["seed"] = options.seed;
  summary["genus_max"] = options.genus_max;
  summary["violations"] = outcome.violating_instances;
  summary["unconfirmed"] = outcome.unconfirmed_instances;
  summary["equality_counts"] = counts;
  summary["near_misses"] = near;
  summary["instances"] = instances;
  outcome.summary = std::move(summary);

  if (!options.output_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(options.output_dir);
    std::ofstream out(fs::path(options.output_dir) / "summary.json");
    out << outcome.summary.dump(2) << "\n";
    if (!outcome.violating_instances.empty()) {
      fs::create_directories(fs::path(options.output_dir) / "violations");
      for (const auto& row : rows) {
        if (!row.violated) continue;
        std::ofstream v(fs::path(options.output_dir) / "violations" /
                        (row.instance.id + ".json"));
        v << row.repro.dump(2) << "\n";
      }
    }
  }
  return outcome;
}

}  // namespace hilco
