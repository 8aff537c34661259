#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ssmc/generators.hpp"
#include "ssmc/oracle.hpp"
#include "ssmc/solver_degree2.hpp"
#include "ssmc/solver_separated.hpp"

namespace ssmc {

// Outcome of one randomized property suite.
struct SuiteResult {
  std::string suite;
  int trials = 0;
  int failures = 0;
  // Secondary checks folded into the trials: submodular pairs in the
  // bipartite suite, assignment pattern checks in the envy suite,
  // candidate-family scans in the sat suite.
  long long samples = 0;
  std::string first_failure;         // what the first failing check saw
  std::string first_counterexample;  // serialized input behind it

  bool ok() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 0;  // 0 picks the suite's default
  OracleBudget budget;
};

// Replaceable solver entry points, so a suite can be aimed at a
// deliberately broken solver to confirm it would be caught.
using InstanceSolver = std::function<std::optional<Matching>(const Instance&)>;
using EnvySolver = std::function<std::optional<Matching>(const EnvyInstance&)>;

// Each suite draws independent seeded random inputs and compares library
// answers against exhaustive oracles and directly evaluated definitions.
SuiteResult run_preprocess_suite(const VerifyOptions& opt);
SuiteResult run_separated_suite(const VerifyOptions& opt, const InstanceSolver& solver = {});
SuiteResult run_degree2_suite(const VerifyOptions& opt, const InstanceSolver& solver = {});
SuiteResult run_envy_suite(const VerifyOptions& opt, const EnvySolver& solver = {});
SuiteResult run_sat_suite(const VerifyOptions& opt);
SuiteResult run_bipartite_suite(const VerifyOptions& opt);

const std::vector<std::string>& suite_names();
std::optional<SuiteResult> run_suite(const std::string& mode, const VerifyOptions& opt);

// Structured matchings of a reduced formula instance: every combination of
// per-variable hospital choice and per-clause hub pattern, completed the
// same way assignment_to_matching completes a satisfying assignment. A
// stable member should exist exactly when the formula is satisfiable, and
// every stable member should decode to a satisfying assignment.
struct CandidateScan {
  long long candidates = 0;
  long long stable = 0;
  bool stable_decode_satisfies = true;
};

CandidateScan scan_sat_candidates(const B2Formula& f, const Instance& inst,
                                  const SatMapping& map);

// The k-th value of the seed's output stream, computed directly so trials
// stay independent of evaluation order.
std::uint64_t trial_seed(std::uint64_t seed, int k);

}  // namespace ssmc
