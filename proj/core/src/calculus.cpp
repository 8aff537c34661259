#include "ssmc/calculus.hpp"

#include <algorithm>

namespace ssmc {

std::vector<int> incident_edges(const Instance& inst, const EdgeSet& F, Side side, int v) {
  std::vector<int> out;
  for (int eid : inst.vertex_edges(side, v))
    if (F.contains(eid)) out.push_back(eid);
  return out;
}

std::vector<int> doctors_with_edges(const Instance& inst, const EdgeSet& F) {
  std::vector<int> out;
  for (int d = 0; d < inst.num_doctors(); ++d)
    for (int eid : inst.doctor_edges(d))
      if (F.contains(eid)) {
        out.push_back(d);
        break;
      }
  return out;
}

std::vector<int> hospital_neighborhood(const Instance& inst, const EdgeSet& F,
                                       const std::vector<int>& doctors) {
  std::vector<bool> seen(inst.num_hospitals(), false);
  for (int d : doctors)
    for (int eid : inst.doctor_edges(d))
      if (F.contains(eid)) seen[inst.edge(eid).hospital] = true;
  std::vector<int> out;
  for (int h = 0; h < inst.num_hospitals(); ++h)
    if (seen[h]) out.push_back(h);
  return out;
}

Relation3 compare_at_vertex(const Instance& inst, Side side, int v, std::optional<int> e,
                            std::optional<int> f) {
  auto check = [&](std::optional<int> x) {
    if (x) {
      require(*x >= 0 && *x < inst.num_edges(), errc::edge_not_in_e,
              "edge id " + std::to_string(*x) + " out of range");
      require(inst.endpoint(side, *x) == v, errc::not_incident,
              "edge " + inst.edge_label(*x) + " is not incident to " + inst.vertex_name(side, v));
    }
  };
  check(e);
  check(f);
  if (!e && !f) return Relation3::tied;
  if (!e) return Relation3::worse;
  if (!f) return Relation3::better;
  int re = inst.rank_at(side, *e), rf = inst.rank_at(side, *f);
  if (re < rf) return Relation3::better;
  if (re > rf) return Relation3::worse;
  return Relation3::tied;
}

namespace {

// Best (lowest) rank among F-edges at v, or 0 when F(v) is empty.
int best_rank(const Instance& inst, Side side, int v, const EdgeSet& F) {
  int best = 0;
  for (int eid : inst.vertex_edges(side, v))
    if (F.contains(eid)) {
      int r = inst.rank_at(side, eid);
      if (best == 0 || r < best) best = r;
    }
  return best;
}

}  // namespace

EdgeSet ch_at_vertex(const Instance& inst, Side side, int v, const EdgeSet& F) {
  EdgeSet out(inst.num_edges());
  int best = best_rank(inst, side, v, F);
  if (best == 0) return out;
  for (int eid : inst.vertex_edges(side, v))
    if (F.contains(eid) && inst.rank_at(side, eid) == best) out.insert(eid);
  return out;
}

namespace {

EdgeSet ch_side(const Instance& inst, const EdgeSet& F, Side side) {
  EdgeSet out(inst.num_edges());
  for (int v = 0; v < inst.num_vertices(side); ++v) {
    int best = best_rank(inst, side, v, F);
    if (best == 0) continue;
    for (int eid : inst.vertex_edges(side, v))
      if (F.contains(eid) && inst.rank_at(side, eid) == best) out.insert(eid);
  }
  return out;
}

}  // namespace

EdgeSet ch_doctors(const Instance& inst, const EdgeSet& F) {
  return ch_side(inst, F, Side::doctor);
}

EdgeSet ch_hospitals(const Instance& inst, const EdgeSet& F) {
  return ch_side(inst, F, Side::hospital);
}

EdgeSet ch(const Instance& inst, const EdgeSet& F) {
  return ch_hospitals(inst, ch_doctors(inst, F));
}

bool is_flat(const Instance& inst, const EdgeSet& F) {
  for (Side side : {Side::doctor, Side::hospital})
    for (int v = 0; v < inst.num_vertices(side); ++v) {
      int seen = 0;
      for (int eid : inst.vertex_edges(side, v))
        if (F.contains(eid)) {
          int r = inst.rank_at(side, eid);
          if (seen != 0 && r != seen) return false;
          seen = r;
        }
    }
  return true;
}

namespace {

// rel_to_flat without the flatness re-check, for use in loops.
Relation3 rel_to_flat_unchecked(const Instance& inst, int eid, Side side, const EdgeSet& F) {
  int v = inst.endpoint(side, eid);
  int group = best_rank(inst, side, v, F);
  if (group == 0) {
    require(side == Side::doctor, errc::empty_flat_hospital,
            "no edge of the flat set at hospital " + inst.vertex_name(side, v));
    return Relation3::better;
  }
  int r = inst.rank_at(side, eid);
  if (r < group) return Relation3::better;
  if (r == group) return Relation3::tied;
  return Relation3::worse;
}

}  // namespace

Relation3 rel_to_flat(const Instance& inst, int eid, Side side, const EdgeSet& F) {
  require(is_flat(inst, F), errc::not_flat, "edge set is not flat");
  return rel_to_flat_unchecked(inst, eid, side, F);
}

EdgeSet block_set(const Instance& inst, const EdgeSet& F) {
  require(is_flat(inst, F), errc::not_flat, "edge set is not flat");
  EdgeSet out(inst.num_edges());
  for (int eid = 0; eid < inst.num_edges(); ++eid) {
    if (F.contains(eid)) continue;
    int h = inst.edge(eid).hospital;
    bool h_has = false;
    for (int fe : inst.hospital_edges(h))
      if (F.contains(fe)) {
        h_has = true;
        break;
      }
    if (!h_has) continue;
    Relation3 rd = rel_to_flat_unchecked(inst, eid, Side::doctor, F);
    if (rd == Relation3::worse) continue;
    Relation3 rh = rel_to_flat_unchecked(inst, eid, Side::hospital, F);
    bool ok = rd == Relation3::better ? rh != Relation3::worse : rh == Relation3::better;
    if (ok) out.insert(eid);
  }
  return out;
}

}  // namespace ssmc
