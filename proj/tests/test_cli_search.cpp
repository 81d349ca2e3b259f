#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "hilco/analysis.hpp"
#include "hilco/search.hpp"

using namespace hilco;

namespace {

std::string data_path(const std::string& name) {
  return std::string(HILCO_DATA_DIR) + "/instances/" + name;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HILCO_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("corpus instances load and analyze cleanly") {
  for (const char* name :
       {"h4.json", "h4_m.json", "t3_a3.json", "rv_sharp_a4.json", "b2_lift_a3.json",
        "h2_b2.json", "param_regular.json", "param_semigroup.json"}) {
    Instance inst = load_instance_file(data_path(name));
    AnalysisResult r = analyze_instance(inst);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("analyze exit codes") {
  CHECK(run_cli("analyze --input " + data_path("h4.json")) == 0);
  CHECK(run_cli("analyze --input " + data_path("does_not_exist.json")) == 2);
}

TEST_CASE("malformed semigroup exits with an input error") {
  const std::string bad = "/tmp/hilco_bad_semigroup.json";
  {
    std::ofstream out(bad);
    out << R"({"id":"bad","semigroup":[4,6],"ideal":[[[1,1,4]]],"module":"ring"})";
  }
  CHECK(run_cli("analyze --input " + bad) == 2);
}

TEST_CASE("reproduce exit codes") {
  CHECK(run_cli("reproduce t3 --a 4") == 0);
  CHECK(run_cli("reproduce rv-sharp --a 3") == 0);
  CHECK(run_cli("reproduce b2-lift --a 4 --d 3") == 0);
  CHECK(run_cli("reproduce nonsense") == 2);
}

TEST_CASE("search summaries are byte-identical for a fixed seed") {
  SearchOptions opt;
  opt.count = 12;
  opt.seed = 77;
  opt.genus_max = 4;
  SearchOutcome a = run_search(opt);
  SearchOutcome b = run_search(opt);
  CHECK(a.summary.dump() == b.summary.dump());
  CHECK(a.violating_instances.empty());
}

TEST_CASE("search with genus_max 0 uses the regular ring only") {
  SearchOptions opt;
  opt.count = 8;
  opt.seed = 5;
  opt.genus_max = 0;
  SearchOutcome out = run_search(opt);
  CHECK(out.violating_instances.empty());
  for (const auto& inst : out.summary["instances"]) {
    CHECK(inst["e1"].get<long long>() == 0);
    CHECK(inst["e2"].get<long long>() == 0);
  }
}

TEST_CASE("search writes a summary and reproduction files") {
  SearchOptions opt;
  opt.count = 6;
  opt.seed = 123;
  opt.genus_max = 4;
  opt.output_dir = "/tmp/hilco_search_out";
  SearchOutcome out = run_search(opt);
  CHECK(out.violating_instances.empty());
  const std::string summary = slurp("/tmp/hilco_search_out/summary.json");
  CHECK(summary.find("\"equality_counts\"") != std::string::npos);
}

TEST_CASE("report files are stable across runs through the CLI") {
  const std::string out1 = "/tmp/hilco_rep1.json";
  const std::string out2 = "/tmp/hilco_rep2.json";
  REQUIRE(run_cli("analyze --input " + data_path("t3_a3.json") + " --output " + out1) == 0);
  REQUIRE(run_cli("analyze --input " + data_path("t3_a3.json") + " --output " + out2) == 0);
  CHECK(slurp(out1) == slurp(out2));
  CHECK(!slurp(out1).empty());
}

TEST_CASE("random instances are reproducible") {
  Instance a = random_instance(2024, 5, 6);
  Instance b = random_instance(2024, 5, 6);
  CHECK(instance_to_json(a) == instance_to_json(b));
}

TEST_CASE("worker-pool sweeps aggregate independently of scheduling") {
  SearchOptions seq;
  seq.count = 16;
  seq.seed = 31;
  seq.genus_max = 5;
  SearchOptions par = seq;
  par.jobs = 4;
  CHECK(run_search(seq).summary.dump() == run_search(par).summary.dump());
}
