#include "ssmc/solver_separated.hpp"

namespace ssmc {

bool satisfies_star(const Instance& inst) {
  for (int d = 0; d < inst.num_doctors(); ++d) {
    int worst_open = 0, best_closed = 0;
    for (int eid : inst.doctor_edges(d)) {
      int r = inst.doctor_rank(eid);
      if (inst.is_closed(inst.edge(eid).hospital)) {
        if (best_closed == 0 || r < best_closed) best_closed = r;
      } else {
        if (r > worst_open) worst_open = r;
      }
    }
    if (worst_open != 0 && best_closed != 0 && worst_open >= best_closed) return false;
  }
  return true;
}

SeparatedResult solve_separated_full(const Instance& inst) {
  require(satisfies_star(inst), errc::star_violated,
          "a doctor weakly prefers a closed hospital to an open one");
  SeparatedResult res;
  res.pre = preprocess(inst);
  CalmOutcome calm = doctor_optimal_when_calm(inst, res.pre);
  res.critical = std::move(calm.critical);
  if (calm.matching) {
    check_invariant(is_stable(inst, *calm.matching), "solver produced an unstable matching");
    res.matching = std::move(calm.matching);
  }
  return res;
}

std::optional<Matching> solve_separated(const Instance& inst) {
  return solve_separated_full(inst).matching;
}

}  // namespace ssmc
