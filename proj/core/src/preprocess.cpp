#include "ssmc/preprocess.hpp"

#include <algorithm>

namespace ssmc {

namespace {

// Edges of F incident to a doctor in N.
EdgeSet edges_of_doctors(const Instance& inst, const EdgeSet& F, const std::vector<int>& doctors) {
  EdgeSet out(inst.num_edges());
  for (int d : doctors)
    for (int eid : inst.doctor_edges(d))
      if (F.contains(eid)) out.insert(eid);
  return out;
}

std::vector<int> new_edges(const EdgeSet& next, const EdgeSet& prev) {
  return (next - prev).ids();
}

}  // namespace

PreprocessResult preprocess(const Instance& inst, bool keep_trace) {
  const int m = inst.num_edges();
  const EdgeSet everything = EdgeSet::all(inst);

  PreprocessResult res;
  EdgeSet R(m);
  Matching mu;
  EdgeSet L(m);

  int round = 0;
  while (true) {
    ++round;
    check_invariant(round <= m + 1, "outer loop exceeded its bound");

    // Inner loop: alternate between dropping edges a doctor can no longer
    // get (everything below the best remaining group) and, once that
    // settles, dropping the flat-set edges of the smallest doctor set whose
    // neighborhood is too small to match it. Stops when nothing grows, at
    // which point the maximum matching saturates the remaining doctors.
    EdgeSet P = R;
    int inner = 0;
    while (true) {
      ++inner;
      check_invariant(inner <= m + 1, "inner loop exceeded its bound");
      EdgeSet remaining = everything - P;
      L = ch(inst, remaining);
      EdgeSet Q = P | (ch_doctors(inst, remaining) - L);
      EdgeSet next = Q;
      if (Q == P) {
        DeficiencyResult def = deficiency(inst, L);
        mu = def.maximum;
        int dof = static_cast<int>(doctors_with_edges(inst, remaining).size());
        if (def.nu < dof) {
          next = Q | edges_of_doctors(inst, L, def.minimal_violator);
          if (keep_trace)
            res.trace.push_back({round, inner, TraceStep::Kind::hall_violator,
                                 new_edges(next, P), std::nullopt});
        }
      } else if (keep_trace) {
        res.trace.push_back({round, inner, TraceStep::Kind::dominated, new_edges(next, P),
                             std::nullopt});
      }
      if (next == P) break;
      P = next;
    }
    res.max_inner = std::max(res.max_inner, inner);

    // The settled flat set may still contain a forbidden edge that would
    // destabilize it; then every flat-set edge at that hospital is
    // unusable too, and the computation starts over.
    L = ch(inst, everything - P);
    EdgeSet self_block = P & block_set(inst, L);
    EdgeSet R_next = P;
    if (!self_block.empty()) {
      int b = self_block.ids().front();
      int h = inst.edge(b).hospital;
      EdgeSet at_h(m);
      for (int eid : inst.hospital_edges(h))
        if (L.contains(eid)) at_h.insert(eid);
      check_invariant(!at_h.empty(), "self-blocking edge at a hospital with no flat-set edge");
      R_next = P | at_h;
      if (keep_trace)
        res.trace.push_back({round, inner, TraceStep::Kind::block_edge, new_edges(R_next, P), b});
    }
    if (R_next == P) {
      R = P;
      break;
    }
    R = R_next;
  }
  res.rounds = round;

  res.forbidden = R;
  res.flat = ch(inst, everything - R);
  res.mu = mu;

  check_invariant(res.mu.as_edge_set(inst).is_subset_of(res.flat),
                  "result matching leaves the flat set");
  int dof = static_cast<int>(doctors_with_edges(inst, everything - R).size());
  check_invariant(res.mu.size() == dof, "result matching does not saturate the remaining doctors");
  return res;
}

std::vector<int> critical_hospitals(const Instance& inst, const PreprocessResult& res) {
  std::vector<int> out;
  for (int h = 0; h < inst.num_hospitals(); ++h) {
    if (inst.is_closed(h)) continue;
    if (res.mu.hospital_edge(h)) continue;
    bool flagged = false;
    for (int eid : inst.hospital_edges(h))
      if (res.flat.contains(eid) || res.forbidden.contains(eid)) {
        flagged = true;
        break;
      }
    if (flagged) out.push_back(h);
  }
  return out;
}

CalmOutcome doctor_optimal_when_calm(const Instance& inst, const PreprocessResult& res) {
  CalmOutcome out;
  out.critical = critical_hospitals(inst, res);
  if (out.critical.empty()) {
    check_invariant(is_stable(inst, res.mu), "calm result matching is not stable");
    out.matching = res.mu;
  }
  return out;
}

}  // namespace ssmc
