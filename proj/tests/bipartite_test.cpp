#include "doctest.h"
#include "ssmc/bipartite.hpp"
#include "ssmc/oracle.hpp"
#include "test_util.hpp"

using namespace ssmc;
using namespace ssmc::testutil;

namespace {

std::vector<int> doctors_by_name(const Instance& inst, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(*inst.find_doctor(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("maximum matching on a perfect instance") {
  Instance inst = inst_of(
      "doctors: a b c\nhospitals: x y z\n"
      "pref a: x = y\npref b: x\npref c: y = z\n"
      "pref x: a = b\npref y: a = c\npref z: c\n");
  Matching m = max_matching(inst, EdgeSet::all(inst));
  CHECK(m.size() == 3);

  Matching partial = max_matching(inst, edges_of(inst, {{"a", "x"}, {"b", "x"}}));
  CHECK(partial.size() == 1);
  CHECK(max_matching(inst, EdgeSet::none(inst)).size() == 0);
}

TEST_CASE("maximum matching needs augmenting paths") {
  // Greedy in edge order picks (a,x) first and strands b unless it augments.
  Instance inst = inst_of(
      "doctors: a b\nhospitals: x y\n"
      "pref a: x = y\npref b: x\n"
      "pref x: a = b\npref y: a\n");
  Matching m = max_matching(inst, EdgeSet::all(inst));
  CHECK(m.size() == 2);
  CHECK(m.contains(eid_of(inst, "a", "y")));
  CHECK(m.contains(eid_of(inst, "b", "x")));
}

TEST_CASE("deficiency on a Hall violation") {
  Instance inst = inst_of(
      "doctors: a b c\nhospitals: x y\n"
      "pref a: x\npref b: x\npref c: x = y\n"
      "pref x: a = b = c\npref y: c\n");
  DeficiencyResult r = deficiency(inst, EdgeSet::all(inst));
  CHECK(r.nu == 2);
  CHECK(r.min_rho == -1);
  CHECK(r.maximum.size() == 2);
  CHECK(r.minimal_violator == doctors_by_name(inst, {"a", "b"}));
}

TEST_CASE("deficiency of a saturable set is zero with an empty violator") {
  Instance inst = inst_of(
      "doctors: a b\nhospitals: x y\n"
      "pref a: x\npref b: y\npref x: a\npref y: b\n");
  DeficiencyResult r = deficiency(inst, EdgeSet::all(inst));
  CHECK(r.nu == 2);
  CHECK(r.min_rho == 0);
  CHECK(r.minimal_violator.empty());

  DeficiencyResult empty = deficiency(inst, EdgeSet::none(inst));
  CHECK(empty.nu == 0);
  CHECK(empty.min_rho == 0);
  CHECK(empty.minimal_violator.empty());
}

TEST_CASE("the minimal violator is the meet of all minimizers") {
  Instance inst = inst_of(
      "doctors: a b c d\nhospitals: x y z\n"
      "pref a: x\npref b: x\npref c: y = z\npref d: y = z\n"
      "pref x: a = b\npref y: c = d\npref z: c = d\n");
  EdgeSet F = EdgeSet::all(inst);
  DeficiencyResult r = deficiency(inst, F);
  CHECK(r.min_rho == -1);
  CHECK(r.minimal_violator == doctors_by_name(inst, {"a", "b"}));

  MinimizerEnum en = minimizers_bruteforce(inst, F);
  CHECK(en.min_rho == r.min_rho);
  // {a,b} and {a,b,c,d} both minimize; the meet is {a,b}.
  CHECK(en.minimizers.size() == 2);
  CHECK(en.minimizers.front() == r.minimal_violator);
}

TEST_CASE("minimizers are closed under intersection") {
  Instance inst = inst_of(
      "doctors: a b c d\nhospitals: x y z w\n"
      "pref a: x = y\npref b: x\npref c: z = w\npref d: z\n"
      "pref x: a = b\npref y: a\npref z: c = d\npref w: c\n");
  EdgeSet F = EdgeSet::all(inst);
  MinimizerEnum en = minimizers_bruteforce(inst, F);
  for (const auto& X : en.minimizers)
    for (const auto& Y : en.minimizers) {
      std::vector<int> meet;
      std::set_intersection(X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(meet));
      bool found = false;
      for (const auto& Z : en.minimizers)
        if (Z == meet) found = true;
      CHECK(found);
    }
  DeficiencyResult r = deficiency(inst, F);
  CHECK(r.minimal_violator == en.minimizers.front());
}
