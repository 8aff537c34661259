#pragma once

#include "ssmc/stability.hpp"

namespace ssmc {

// Maximum matching in the subgraph (D, H; F), deterministic for a fixed
// instance and F (phased augmentation over canonical adjacency order).
Matching max_matching(const Instance& inst, const EdgeSet& F);

// Worst Hall-condition violation of F. rho(X) = |Γ_F(X)| - |X| over subsets
// X of D[F]; its minimum equals nu - |D[F]| where nu is the maximum matching
// size, and the minimizers are closed under intersection. minimal_violator
// is the unique smallest minimizer: the doctors reachable from unmatched
// doctors by paths alternating between F-edges and matching edges.
struct DeficiencyResult {
  Matching maximum;
  int nu = 0;
  int min_rho = 0;
  std::vector<int> minimal_violator;
};

DeficiencyResult deficiency(const Instance& inst, const EdgeSet& F);

}  // namespace ssmc
