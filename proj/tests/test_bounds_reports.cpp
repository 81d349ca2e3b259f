#include <doctest.h>

#include "hilco/analysis.hpp"
#include "hilco/errors.hpp"

using namespace hilco;

namespace {

nlohmann::json mono_triple(int e) { return nlohmann::json::array({{1, 1, e}}); }

Instance t3_instance(long long a, int lift = 0) {
  Instance inst;
  inst.id = "t3";
  inst.semigroup = {a, a + 1, a * a - a - 1};
  inst.ideal_generators = {series_monomial(static_cast<int>(a)),
                           series_monomial(static_cast<int>(a + 1))};
  inst.lift = lift;
  inst.options.seed = 5;
  return inst;
}

const BoundEntry* find_bound(const AnalysisResult& r, const std::string& id) {
  for (const auto& e : r.bounds) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const CharacterizationEntry* find_char(const AnalysisResult& r, const std::string& id) {
  for (const auto& c : r.characterizations) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(1, 2) == 0);
  CHECK(binom(-2, 2) == 0);
  CHECK(binom(3, 0) == 1);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(3, 3) == 1);
}

TEST_CASE("two-generated extremal instance: full report") {
  AnalysisResult r = analyze_instance(t3_instance(3, 1));
  CHECK(r.violations.empty());
  CHECK(r.base.e0 == 3);
  CHECK(r.base.e1 == 2);
  CHECK(r.base.b == 1);
  CHECK(r.base.pn == 2);

  const BoundEntry* eh = find_bound(r, "e1_module");
  REQUIRE(eh);
  CHECK(eh->applicable);
  CHECK(eh->lhs == 2);
  CHECK(eh->rhs == 2);
  CHECK(eh->equality);

  const BoundEntry* eb3 = find_bound(r, "e1_embdim");
  REQUIRE(eb3);
  CHECK(eb3->rhs == 2);  // floor(C(3,2)/1) - C(3-1,2) = 3 - 1
  CHECK(eb3->equality);

  const BoundEntry* b1 = find_bound(r, "e2_cubic");
  REQUIRE(b1);
  CHECK(b1->lhs == 1);
  CHECK(b1->rhs == 1);  // C(3,3)
  CHECK(b1->equality);

  const BoundEntry* ab8 = find_bound(r, "e2_embdim");
  REQUIRE(ab8);
  CHECK(ab8->applicable);
  CHECK(ab8->rhs == 2);  // 3*C(3,3)/1 - 1*C(4-2,2)
  CHECK(ab8->holds);
  CHECK(!ab8->equality);

  const CharacterizationEntry* h3 = find_char(r, "e1_extremal");
  REQUIRE(h3);
  CHECK(h3->applicable);
  CHECK(h3->all_equivalent);
  for (const auto& [name, v] : h3->conditions) CHECK(v);
  for (const auto& [name, v] : h3->consequences) CHECK(v);

  const CharacterizationEntry* b2 = find_char(r, "e2_extremal");
  REQUIRE(b2);
  CHECK(b2->applicable);
  CHECK(b2->all_equivalent);
  for (const auto& [name, v] : b2->conditions) CHECK(v);

  const CharacterizationEntry* t2 = find_char(r, "extremal_ideal_structure");
  REQUIRE(t2);
  CHECK(t2->applicable);
  CHECK(t2->all_equivalent);
}

TEST_CASE("module pair over <2,3>: gate fidelity") {
  Instance inst;
  inst.id = "h4m";
  inst.semigroup = {2, 3};
  inst.ideal_generators = {series_monomial(2), series_monomial(3)};
  inst.module_is_ring = false;
  inst.module_generators = {series_monomial(2), series_monomial(3)};
  AnalysisResult r = analyze_instance(inst);
  CHECK(r.violations.empty());

  const CharacterizationEntry* h3 = find_char(r, "e1_extremal");
  REQUIRE(h3);
  CHECK(!h3->applicable);
  REQUIRE(h3->conditions.size() == 4);
  CHECK(h3->conditions[0].second);   // the coefficient identity holds
  CHECK(!h3->conditions[1].second);  // the series shape does not
  CHECK(!h3->conditions[2].second);
  CHECK(!h3->conditions[3].second);
}

TEST_CASE("degenerate case e0 = b") {
  Instance inst;
  inst.id = "регular";
  inst.id = "regular";
  inst.semigroup = {1};
  inst.ideal_generators = {series_monomial(3)};
  AnalysisResult r = analyze_instance(inst);
  CHECK(r.violations.empty());
  CHECK(r.base.e0 == 3);
  CHECK(r.base.b == 3);
  CHECK(r.base.e1 == 0);
  const CharacterizationEntry* dg = find_char(r, "degenerate_multiplicity");
  REQUIRE(dg);
  CHECK(dg->applicable);
  CHECK(dg->all_equivalent);
}

TEST_CASE("lift arithmetic") {
  AnalysisResult r = analyze_instance(t3_instance(3, 0));
  InstanceInvariants lifted = lift_instance(r.base, 1);
  CHECK(lifted.d == 2);
  CHECK(lifted.mu_m == 4);
  CHECK(lifted.mu_I == 3);
  CHECK(lifted.e0 == 3);
  CHECK(lifted.e1 == 2);
  CHECK(lifted.e2 == 1);
  CHECK(lifted.graded.depth == 1);
  CHECK(lifted.graded.reg == 2);
  CHECK(lift_instance(r.base, 0).d == 1);
}

TEST_CASE("reports are byte-deterministic") {
  Instance inst = t3_instance(4, 1);
  const std::string a = report_json(analyze_instance(inst)).dump(2);
  const std::string b = report_json(analyze_instance(inst)).dump(2);
  CHECK(a == b);
}

TEST_CASE("instance JSON round trip") {
  Instance inst = t3_instance(4, 1);
  inst.module_is_ring = false;
  inst.module_generators = {series_add(series_monomial(0), series_monomial(2, Rat(1, 2)))};
  nlohmann::json j = instance_to_json(inst);
  Instance back = instance_from_json(j);
  CHECK(instance_to_json(back) == j);
  CHECK(back.module_generators.size() == 1);
  CHECK(back.module_generators[0] == inst.module_generators[0]);
}

TEST_CASE("malformed instances are rejected") {
  nlohmann::json j;
  j["id"] = "bad";
  j["semigroup"] = {4, 6};
  j["ideal"] = nlohmann::json::array({mono_triple(4)});
  Instance inst = instance_from_json(j);
  CHECK_THROWS_AS(analyze_instance(inst), NotCoprime);

  nlohmann::json j2 = j;
  j2["semigroup"] = {2, 3};
  j2["ideal"] = nlohmann::json::array({nlohmann::json::array({{1, 0, 2}})});
  CHECK_THROWS_AS(instance_from_json(j2), ParseError);

  nlohmann::json j3 = j;
  j3["semigroup"] = {2, 3};
  j3["ideal"] = nlohmann::json::array({mono_triple(1)});  // t not in k[[t^2,t^3]]
  CHECK_THROWS_AS(analyze_instance(instance_from_json(j3)), ParseError);

  nlohmann::json j4 = j;
  j4["semigroup"] = {2, 3};
  j4["ideal"] = nlohmann::json::array({mono_triple(0)});  // a unit
  CHECK_THROWS_AS(analyze_instance(instance_from_json(j4)), ParseError);
}

TEST_CASE("strict extremal equivalence fires on odd deep ideals") {
  // I = (t^7, t^8) over <2,3>: b = 3, e0 = 7 > 6 = e0(m^b).
  Instance inst;
  inst.id = "deep-odd";
  inst.semigroup = {2, 3};
  inst.ideal_generators = {series_monomial(7), series_monomial(8)};
  AnalysisResult r = analyze_instance(inst);
  CHECK(r.violations.empty());
  CHECK(r.base.b == 3);
  CHECK(r.base.e0 == 7);
  const CharacterizationEntry* h5 = find_char(r, "e1_extremal_strict");
  REQUIRE(h5);
  CHECK(h5->applicable);
  CHECK(h5->all_equivalent);
}
