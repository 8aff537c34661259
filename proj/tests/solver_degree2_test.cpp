#include "doctest.h"
#include "ssmc/oracle.hpp"
#include "ssmc/solver_degree2.hpp"
#include "test_util.hpp"

using namespace ssmc;
using namespace ssmc::testutil;

namespace {

const char* kHandover =
    "doctors: a b c\nhospitals: s x\nclosed: s\n"
    "pref a: x\npref b: x\npref c: s > x\n"
    "pref x: c > a = b\npref s: c\n";

const char* kStuck =
    "doctors: a b c\nhospitals: s x\nclosed: s\n"
    "pref a: x\npref b: x\npref c: s > x\n"
    "pref x: a = b > c\npref s: c\n";

const char* kPath =
    "doctors: a b\nhospitals: s1 s2 s3\n"
    "pref a: s1 = s2\npref b: s2 = s3\n"
    "pref s1: a\npref s2: a = b\npref s3: b\n";

}  // namespace

TEST_CASE("doctors with more than two edges are refused") {
  Instance inst = inst_of(
      "doctors: a\nhospitals: x y z\npref a: x = y = z\n"
      "pref x: a\npref y: a\npref z: a\n");
  try {
    solve_degree2(inst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degree_bound);
  }
}

TEST_CASE("a calm instance is solved by preprocessing alone") {
  Instance inst = inst_of("doctors: a b\nhospitals: x\npref a: x\npref b: x\npref x: a > b\n");
  Degree2Result res = solve_degree2_full(inst);
  REQUIRE(res.matching.has_value());
  CHECK(*res.matching == matching_of(inst, {{"a", "x"}}));
  CHECK_FALSE(res.analysis.has_value());
  CHECK_FALSE(res.digraph.has_value());
}

TEST_CASE("a leaf doctor hands its slot to a starving hospital") {
  Instance inst = inst_of(kHandover);
  Degree2Result res = solve_degree2_full(inst);

  REQUIRE(res.analysis.has_value());
  REQUIRE(res.analysis->components.size() == 2);
  const ComponentInfo& leaf = res.analysis->components[0];
  CHECK(leaf.kind == ComponentInfo::Kind::balanced_leaf);
  CHECK(leaf.leaf_doctor == *inst.find_doctor("c"));
  CHECK(leaf.leaf_hospital == *inst.find_hospital("s"));
  CHECK(leaf.alt_hospital == *inst.find_hospital("x"));
  const ComponentInfo& lone = res.analysis->components[1];
  CHECK(lone.kind == ComponentInfo::Kind::forbidden_singleton);
  CHECK(lone.hospitals == std::vector<int>{*inst.find_hospital("x")});

  REQUIRE(res.digraph.has_value());
  CHECK(res.digraph->arcs == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(res.digraph->sources == std::vector<int>{1});
  CHECK(res.digraph->sinks == std::vector<int>{0});

  REQUIRE(res.matching.has_value());
  CHECK(*res.matching == matching_of(inst, {{"c", "x"}}));
  CHECK(is_stable(inst, *res.matching));
  CHECK_FALSE(all_stable_matchings(inst).empty());
}

TEST_CASE("without a willing leaf doctor the starving hospital dooms the instance") {
  Instance inst = inst_of(kStuck);
  Degree2Result res = solve_degree2_full(inst);
  CHECK_FALSE(res.matching.has_value());
  REQUIRE(res.digraph.has_value());
  CHECK(res.digraph->arcs.empty());
  CHECK(res.digraph->sources == std::vector<int>{1});
  CHECK(all_stable_matchings(inst).empty());
}

TEST_CASE("tree matching points every doctor away from the root") {
  Instance inst = inst_of(kPath);
  PreprocessResult pre = preprocess(inst);
  ComponentAnalysis analysis = analyze_components(inst, pre);
  REQUIRE(analysis.components.size() == 1);
  const ComponentInfo& comp = analysis.components[0];
  REQUIRE(comp.kind == ComponentInfo::Kind::deficient);
  CHECK(comp.doctors.size() == 2);
  CHECK(comp.hospitals.size() == 3);

  CHECK(tree_matching(inst, pre.flat, comp, *inst.find_hospital("s1")) ==
        matching_of(inst, {{"a", "s2"}, {"b", "s3"}}));
  CHECK(tree_matching(inst, pre.flat, comp, *inst.find_hospital("s2")) ==
        matching_of(inst, {{"a", "s1"}, {"b", "s3"}}));
  CHECK(tree_matching(inst, pre.flat, comp, *inst.find_hospital("s3")) ==
        matching_of(inst, {{"a", "s1"}, {"b", "s2"}}));
}

TEST_CASE("an all-open tree component has no stable matching") {
  Instance inst = inst_of(kPath);
  Degree2Result res = solve_degree2_full(inst);
  CHECK_FALSE(res.matching.has_value());
  REQUIRE(res.digraph.has_value());
  CHECK(res.digraph->sources.size() == 1);
  CHECK(res.digraph->sinks.empty());
  CHECK(all_stable_matchings(inst).empty());
}

TEST_CASE("closing one hospital of the tree re-roots the hole onto it") {
  struct Case {
    const char* closed;
    std::vector<std::pair<std::string, std::string>> expect;
  };
  for (const Case& c : {Case{"s1", {{"a", "s2"}, {"b", "s3"}}},
                        Case{"s2", {{"a", "s1"}, {"b", "s3"}}},
                        Case{"s3", {{"a", "s1"}, {"b", "s2"}}}}) {
    Instance inst = inst_of(kPath).with_closed({c.closed});
    auto mu = solve_degree2(inst);
    REQUIRE(mu.has_value());
    CHECK(*mu == matching_of(inst, c.expect));
    CHECK(is_stable(inst, *mu));
  }
}
