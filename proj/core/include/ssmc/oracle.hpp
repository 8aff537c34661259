#pragma once

#include <functional>

#include "ssmc/reductions.hpp"

namespace ssmc {

// Caps for the exhaustive procedures below; exceeding one is an error, not
// a silent truncation.
struct OracleBudget {
  int max_edges = 22;       // instance edge count for matching enumeration
  int max_sat_vars = 20;    // variables for assignment enumeration
  int max_doctors = 12;     // |D[F]| for subset enumeration
};

// Every matching (the empty one included) in canonical order: lexicographic
// on the sorted edge-id sequence. The callback may return false to stop.
void enumerate_matchings(const Instance& inst,
                         const std::function<bool(const std::vector<int>&)>& visit,
                         const OracleBudget& budget = {});

std::vector<Matching> all_stable_matchings(const Instance& inst, const OracleBudget& budget = {});

// First full assignment of doctors to distinct listed hospitals with no
// doctor strictly preferring another doctor's hospital, in canonical order.
std::optional<Matching> envyfree_bruteforce(const EnvyInstance& envy,
                                            const OracleBudget& budget = {});

// Lexicographically first satisfying assignment (false before true, first
// variable most significant), if any.
std::optional<std::vector<bool>> sat_bruteforce(const B2Formula& f,
                                                const OracleBudget& budget = {});

// All minimizers of |Γ_F(X)| - |X| over subsets of D[F], by enumeration.
struct MinimizerEnum {
  int min_rho = 0;
  std::vector<std::vector<int>> minimizers;  // each ascending; canonical order
};

MinimizerEnum minimizers_bruteforce(const Instance& inst, const EdgeSet& F,
                                    const OracleBudget& budget = {});

}  // namespace ssmc
