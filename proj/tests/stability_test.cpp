#include "doctest.h"
#include "ssmc/oracle.hpp"
#include "test_util.hpp"

using namespace ssmc;
using namespace ssmc::testutil;

TEST_CASE("an unmatched edge blocks when weakly better on both sides and strictly on one") {
  Instance inst = inst_of("doctors: a b\nhospitals: x\npref a: x\npref b: x\npref x: a > b\n");

  Matching bx = matching_of(inst, {{"b", "x"}});
  BlockReport r = block_report(inst, bx, eid_of(inst, "a", "x"));
  CHECK(r.weak_doctor);
  CHECK(r.strong_doctor);
  CHECK(r.weak_hospital);
  CHECK(r.strong_hospital);
  CHECK(r.blocks);
  CHECK_FALSE(is_stable(inst, bx));

  Matching ax = matching_of(inst, {{"a", "x"}});
  r = block_report(inst, ax, eid_of(inst, "b", "x"));
  CHECK(r.strong_doctor);
  CHECK_FALSE(r.weak_hospital);
  CHECK_FALSE(r.blocks);
  CHECK(is_stable(inst, ax));
}

TEST_CASE("a tie on one side with strict preference on the other still blocks") {
  Instance inst = inst_of("doctors: a b\nhospitals: x\npref a: x\npref b: x\npref x: a = b\n");
  Matching ax = matching_of(inst, {{"a", "x"}});
  BlockReport r = block_report(inst, ax, eid_of(inst, "b", "x"));
  CHECK(r.strong_doctor);
  CHECK(r.weak_hospital);
  CHECK_FALSE(r.strong_hospital);
  CHECK(r.blocks);

  // Neither singleton nor the empty matching is stable here while x is open.
  CHECK_FALSE(is_stable(inst, ax));
  CHECK_FALSE(is_stable(inst, matching_of(inst, {{"b", "x"}})));
  CHECK_FALSE(is_stable(inst, Matching::from_edge_ids(inst, {})));
}

TEST_CASE("an unmatched closed hospital does not cooperate") {
  Instance inst = inst_of(
      "doctors: a b\nhospitals: x\nclosed: x\npref a: x\npref b: x\npref x: a = b\n");

  Matching empty = Matching::from_edge_ids(inst, {});
  BlockReport r = block_report(inst, empty, eid_of(inst, "a", "x"));
  CHECK(r.weak_doctor);
  CHECK(r.strong_doctor);
  CHECK_FALSE(r.weak_hospital);
  CHECK_FALSE(r.strong_hospital);
  CHECK_FALSE(r.blocks);
  CHECK(is_stable(inst, empty));

  // Once matched, a closed hospital behaves like an open one.
  Matching ax = matching_of(inst, {{"a", "x"}});
  r = block_report(inst, ax, eid_of(inst, "b", "x"));
  CHECK(r.weak_hospital);
  CHECK(r.blocks);
  CHECK_FALSE(is_stable(inst, ax));
}

TEST_CASE("blocking bookkeeping rejects matched edges") {
  Instance inst = inst_of("doctors: a\nhospitals: x\npref a: x\npref x: a\n");
  Matching ax = matching_of(inst, {{"a", "x"}});
  try {
    block_report(inst, ax, eid_of(inst, "a", "x"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::edge_in_matching);
  }
}

TEST_CASE("blocking_edges lists exactly the blocking reports") {
  Instance inst = inst_of(
      "doctors: a b c\nhospitals: x y\n"
      "pref a: x > y\npref b: x\npref c: y\n"
      "pref x: b > a\npref y: c > a\n");
  Matching mu = matching_of(inst, {{"a", "x"}, {"c", "y"}});
  auto blocks = blocking_edges(inst, mu);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].edge == eid_of(inst, "b", "x"));
  CHECK(is_stable(inst, matching_of(inst, {{"b", "x"}, {"c", "y"}})));
}

TEST_CASE("with no closures stability matches the classical reading") {
  Instance inst = inst_of(
      "doctors: a b c\nhospitals: x y z\n"
      "pref a: x = y > z\npref b: x > z\npref c: y = z\n"
      "pref x: b > a\npref y: a = c\npref z: a > b = c\n");
  int checked = 0;
  enumerate_matchings(inst, [&](const std::vector<int>& ids) {
    Matching mu = Matching::from_edge_ids(inst, ids);
    CHECK(is_stable(inst, mu) == naive_stable_no_closures(inst, mu));
    ++checked;
    return true;
  });
  CHECK(checked > 20);
}

TEST_CASE("closing more hospitals never creates new blocking edges") {
  Instance base = inst_of(
      "doctors: a b c\nhospitals: x y z\n"
      "pref a: x = y > z\npref b: x > z\npref c: y = z\n"
      "pref x: b > a\npref y: a = c\npref z: a > b = c\n");
  const std::vector<std::vector<std::string>> closures = {
      {}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"x", "z"}, {"y", "z"}, {"x", "y", "z"}};
  std::vector<Instance> variants;
  for (const auto& c : closures) variants.push_back(base.with_closed(c));

  enumerate_matchings(base, [&](const std::vector<int>& ids) {
    std::vector<int> counts;
    for (size_t i = 0; i < closures.size(); ++i) {
      Matching mu = Matching::from_edge_ids(variants[i], ids);
      counts.push_back(static_cast<int>(blocking_edges(variants[i], mu).size()));
    }
    for (size_t i = 0; i < closures.size(); ++i)
      for (size_t j = 0; j < closures.size(); ++j) {
        bool superset = true;
        for (const auto& name : closures[i])
          if (std::find(closures[j].begin(), closures[j].end(), name) == closures[j].end())
            superset = false;
        if (superset) CHECK(counts[j] <= counts[i]);
      }
    return true;
  });
}
