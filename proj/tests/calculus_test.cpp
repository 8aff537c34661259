#include "doctest.h"
#include "test_util.hpp"

using namespace ssmc;
using namespace ssmc::testutil;

namespace {

const char* kMixed =
    "doctors: a b c\nhospitals: x y z\n"
    "pref a: x = y > z\npref b: x > z\npref c: y = z\n"
    "pref x: b > a\npref y: a = c\npref z: a > b = c\n";

EdgeSet subset_of(const Instance& inst, unsigned mask) {
  EdgeSet s = EdgeSet::none(inst);
  for (int e = 0; e < inst.num_edges(); ++e)
    if (mask & (1u << e)) s.insert(e);
  return s;
}

}  // namespace

TEST_CASE("comparing options at a vertex") {
  Instance inst = inst_of(kMixed);
  int a = *inst.find_doctor("a");
  int ax = eid_of(inst, "a", "x");
  int ay = eid_of(inst, "a", "y");
  int az = eid_of(inst, "a", "z");

  CHECK(compare_at_vertex(inst, Side::doctor, a, ax, ay) == Relation3::tied);
  CHECK(compare_at_vertex(inst, Side::doctor, a, ax, az) == Relation3::better);
  CHECK(compare_at_vertex(inst, Side::doctor, a, az, ay) == Relation3::worse);
  CHECK(compare_at_vertex(inst, Side::doctor, a, ax, std::nullopt) == Relation3::better);
  CHECK(compare_at_vertex(inst, Side::doctor, a, std::nullopt, az) == Relation3::worse);
  CHECK(compare_at_vertex(inst, Side::doctor, a, std::nullopt, std::nullopt) == Relation3::tied);

  int x = *inst.find_hospital("x");
  int bx = eid_of(inst, "b", "x");
  CHECK(compare_at_vertex(inst, Side::hospital, x, bx, ax) == Relation3::better);

  CHECK_THROWS_WITH_AS(compare_at_vertex(inst, Side::doctor, a, bx, std::nullopt),
                       doctest::Contains("not incident"), Error);
}

TEST_CASE("choice keeps the top tie group on each side in turn") {
  Instance inst = inst_of(kMixed);
  EdgeSet all = EdgeSet::all(inst);

  CHECK(ch_at_vertex(inst, Side::doctor, *inst.find_doctor("a"), all) ==
        edges_of(inst, {{"a", "x"}, {"a", "y"}}));
  CHECK(ch_at_vertex(inst, Side::hospital, *inst.find_hospital("x"), all) ==
        edges_of(inst, {{"b", "x"}}));
  CHECK(ch_at_vertex(inst, Side::doctor, *inst.find_doctor("a"), EdgeSet::none(inst)).empty());

  CHECK(ch_doctors(inst, all) ==
        edges_of(inst, {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"c", "y"}, {"c", "z"}}));
  CHECK(ch(inst, all) ==
        edges_of(inst, {{"b", "x"}, {"a", "y"}, {"c", "y"}, {"c", "z"}}));
}

TEST_CASE("choice agrees with the reference definition on every subset") {
  Instance inst = inst_of(kMixed);
  REQUIRE(inst.num_edges() == 7);
  for (unsigned mask = 0; mask < (1u << inst.num_edges()); ++mask) {
    EdgeSet F = subset_of(inst, mask);
    EdgeSet got = ch(inst, F);
    CHECK(got == naive_ch(inst, F));
    CHECK(got.is_subset_of(F));
    CHECK(is_flat(inst, got));
    CHECK(ch(inst, got) == got);
  }
}

TEST_CASE("flatness means one tie group per vertex") {
  Instance inst = inst_of(kMixed);
  CHECK(is_flat(inst, EdgeSet::none(inst)));
  CHECK(is_flat(inst, edges_of(inst, {{"a", "x"}, {"a", "y"}})));
  CHECK(is_flat(inst, edges_of(inst, {{"b", "z"}, {"c", "z"}})));
  CHECK_FALSE(is_flat(inst, edges_of(inst, {{"a", "x"}, {"a", "z"}})));
  CHECK_FALSE(is_flat(inst, edges_of(inst, {{"a", "x"}, {"b", "x"}})));
  CHECK_FALSE(is_flat(inst, EdgeSet::all(inst)));
}

TEST_CASE("position of an edge relative to a flat set") {
  Instance inst = inst_of(kMixed);
  EdgeSet F = edges_of(inst, {{"a", "y"}, {"b", "x"}});

  CHECK(rel_to_flat(inst, eid_of(inst, "a", "x"), Side::doctor, F) == Relation3::tied);
  CHECK(rel_to_flat(inst, eid_of(inst, "a", "z"), Side::doctor, F) == Relation3::worse);
  CHECK(rel_to_flat(inst, eid_of(inst, "c", "y"), Side::doctor, F) == Relation3::better);
  CHECK(rel_to_flat(inst, eid_of(inst, "a", "x"), Side::hospital, F) == Relation3::worse);
  CHECK(rel_to_flat(inst, eid_of(inst, "c", "y"), Side::hospital, F) == Relation3::tied);

  CHECK_THROWS_AS(rel_to_flat(inst, eid_of(inst, "b", "z"), Side::hospital, F), Error);
  try {
    rel_to_flat(inst, eid_of(inst, "b", "z"), Side::hospital, F);
  } catch (const Error& e) {
    CHECK(e.code() == errc::empty_flat_hospital);
  }
  try {
    rel_to_flat(inst, 0, Side::doctor, EdgeSet::all(inst));
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_flat);
  }
}

TEST_CASE("destabilizer examples") {
  Instance inst = inst_of(kMixed);
  CHECK(block_set(inst, edges_of(inst, {{"a", "x"}})) == edges_of(inst, {{"b", "x"}}));
  CHECK(block_set(inst, edges_of(inst, {{"a", "x"}, {"c", "y"}})) ==
        edges_of(inst, {{"b", "x"}}));
  CHECK(block_set(inst, EdgeSet::none(inst)).empty());
}

TEST_CASE("destabilizers agree with the reference reading on every flat subset") {
  Instance inst = inst_of(kMixed);
  int flats = 0;
  for (unsigned mask = 0; mask < (1u << inst.num_edges()); ++mask) {
    EdgeSet F = subset_of(inst, mask);
    if (!is_flat(inst, F)) continue;
    ++flats;
    CHECK(block_set(inst, F) == naive_block_set(inst, F));
  }
  CHECK(flats > 20);
}
