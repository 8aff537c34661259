#include "doctest.h"
#include "ssmc/oracle.hpp"
#include "test_util.hpp"

using namespace ssmc;
using namespace ssmc::testutil;

TEST_CASE("matchings are visited in canonical order") {
  Instance inst = inst_of(
      "doctors: a b\nhospitals: x y\npref a: x = y\npref b: x\n"
      "pref x: a = b\npref y: a\n");
  std::vector<std::vector<int>> seen;
  enumerate_matchings(inst, [&](const std::vector<int>& ids) {
    seen.push_back(ids);
    return true;
  });
  // Edges in id order: (a,x)=0, (a,y)=1, (b,x)=2.
  std::vector<std::vector<int>> expect = {{}, {0}, {1}, {1, 2}, {2}};
  CHECK(seen == expect);
}

TEST_CASE("matching counts on small graphs") {
  auto count = [](const char* text) {
    int n = 0;
    enumerate_matchings(Instance::parse(text), [&](const std::vector<int>&) {
      ++n;
      return true;
    });
    return n;
  };
  CHECK(count("doctors: a\nhospitals: x\npref a: x\npref x: a\n") == 2);
  CHECK(count("doctors: a\nhospitals: x y\npref a: x = y\npref x: a\npref y: a\n") == 3);
  CHECK(count("doctors: a b\nhospitals: x y\npref a: x = y\npref b: x\n"
              "pref x: a = b\npref y: a\n") == 5);
}

TEST_CASE("the visitor can stop the walk") {
  Instance inst = inst_of(
      "doctors: a b\nhospitals: x y\npref a: x = y\npref b: x\n"
      "pref x: a = b\npref y: a\n");
  int n = 0;
  enumerate_matchings(inst, [&](const std::vector<int>&) { return ++n < 3; });
  CHECK(n == 3);
}

TEST_CASE("the edge budget is enforced") {
  Instance inst = inst_of(
      "doctors: a\nhospitals: x y z\npref a: x = y = z\n"
      "pref x: a\npref y: a\npref z: a\n");
  OracleBudget tight;
  tight.max_edges = 2;
  try {
    enumerate_matchings(inst, [](const std::vector<int>&) { return true; }, tight);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget);
  }
}

TEST_CASE("stable sets of the worked examples") {
  CHECK(all_stable_matchings(inst_of("doctors: a b\nhospitals: x\npref a: x\npref b: x\n"
                                     "pref x: a > b\n"))
            .size() == 1);
  CHECK(all_stable_matchings(inst_of("doctors: a b\nhospitals: x\npref a: x\npref b: x\n"
                                     "pref x: a = b\n"))
            .empty());
  CHECK(all_stable_matchings(inst_of("doctors: a\nhospitals: x\nclosed: x\n"
                                     "pref a: x\npref x: a\n"))
            .size() == 2);
  CHECK(all_stable_matchings(inst_of("doctors: a b\nhospitals: x y\npref a: x > y\n"
                                     "pref b: y > x\npref x: b > a\npref y: a > b\n"))
            .size() == 2);
}

TEST_CASE("envy-free search returns the canonically smallest assignment") {
  EnvyInstance tied = EnvyInstance::parse(
      "doctors: a b\nhospitals: x y\npref a: x = y\npref b: x = y\n");
  auto mu = envyfree_bruteforce(tied);
  REQUIRE(mu.has_value());
  Instance graph = reduce_envyfree(tied);
  CHECK(mu->serialize(graph) == "a x\nb y\n");

  EnvyInstance hopeless = EnvyInstance::parse(
      "doctors: a b\nhospitals: x y\npref a: x > y\npref b: x > y\n");
  CHECK_FALSE(envyfree_bruteforce(hopeless).has_value());

  // A partial assignment is never an answer, even with no envy around.
  EnvyInstance starved = EnvyInstance::parse(
      "doctors: a b\nhospitals: x\npref a: x\npref b: x\n");
  CHECK_FALSE(envyfree_bruteforce(starved).has_value());
}

TEST_CASE("sat search returns the lexicographically first assignment") {
  B2Formula f =
      B2Formula::make(3, {{{1, 2, 3}}, {{-1, -2, -3}}, {{1, -2, 3}}, {{-1, 2, -3}}});
  auto phi = sat_bruteforce(f);
  REQUIRE(phi.has_value());
  CHECK(*phi == std::vector<bool>({false, false, true}));

  OracleBudget tight;
  tight.max_sat_vars = 2;
  try {
    sat_bruteforce(f, tight);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget);
  }
}

TEST_CASE("deficiency minimizers by enumeration") {
  Instance inst = inst_of(
      "doctors: a b c\nhospitals: x y\n"
      "pref a: x\npref b: x\npref c: x = y\n"
      "pref x: a = b = c\npref y: c\n");
  MinimizerEnum en = minimizers_bruteforce(inst, EdgeSet::all(inst));
  CHECK(en.min_rho == -1);
  REQUIRE(!en.minimizers.empty());
  CHECK(en.minimizers.front() == std::vector<int>({0, 1}));

  MinimizerEnum none = minimizers_bruteforce(inst, EdgeSet::none(inst));
  CHECK(none.min_rho == 0);
  CHECK(none.minimizers == std::vector<std::vector<int>>{{}});

  OracleBudget tight;
  tight.max_doctors = 2;
  try {
    minimizers_bruteforce(inst, EdgeSet::all(inst), tight);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget);
  }
}
