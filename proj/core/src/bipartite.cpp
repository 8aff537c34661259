#include "ssmc/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace ssmc {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const Instance& inst;
  std::vector<std::vector<int>> adj;  // doctor -> hospitals, canonical order
  std::vector<int> match_d, match_h;  // partners, -1 when free
  std::vector<int> dist;

  explicit HopcroftKarp(const Instance& inst_, const EdgeSet& F) : inst(inst_) {
    adj.resize(inst.num_doctors());
    for (int d = 0; d < inst.num_doctors(); ++d)
      for (int eid : inst.doctor_edges(d))
        if (F.contains(eid)) adj[d].push_back(inst.edge(eid).hospital);
    match_d.assign(inst.num_doctors(), -1);
    match_h.assign(inst.num_hospitals(), -1);
    dist.assign(inst.num_doctors(), kInf);
  }

  bool bfs() {
    std::deque<int> queue;
    for (int d = 0; d < inst.num_doctors(); ++d) {
      if (match_d[d] < 0 && !adj[d].empty()) {
        dist[d] = 0;
        queue.push_back(d);
      } else {
        dist[d] = kInf;
      }
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      int d = queue.front();
      queue.pop_front();
      for (int h : adj[d]) {
        int d2 = match_h[h];
        if (d2 < 0) {
          reachable_free = true;
        } else if (dist[d2] == kInf) {
          dist[d2] = dist[d] + 1;
          queue.push_back(d2);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int d) {
    for (int h : adj[d]) {
      int d2 = match_h[h];
      if (d2 < 0 || (dist[d2] == dist[d] + 1 && dfs(d2))) {
        match_d[d] = h;
        match_h[h] = d;
        return true;
      }
    }
    dist[d] = kInf;
    return false;
  }

  void run() {
    while (bfs()) {
      for (int d = 0; d < inst.num_doctors(); ++d)
        if (match_d[d] < 0 && dist[d] == 0) dfs(d);
    }
  }
};

}  // namespace

Matching max_matching(const Instance& inst, const EdgeSet& F) {
  HopcroftKarp hk(inst, F);
  hk.run();
  std::vector<int> ids;
  for (int d = 0; d < inst.num_doctors(); ++d) {
    if (hk.match_d[d] < 0) continue;
    auto eid = inst.find_edge(d, hk.match_d[d]);
    check_invariant(eid.has_value() && F.contains(*eid), "matched pair is not an F-edge");
    ids.push_back(*eid);
  }
  return Matching::from_edge_ids(inst, std::move(ids));
}

DeficiencyResult deficiency(const Instance& inst, const EdgeSet& F) {
  DeficiencyResult res;
  res.maximum = max_matching(inst, F);
  res.nu = res.maximum.size();

  std::vector<int> dof = doctors_with_edges(inst, F);
  res.min_rho = res.nu - static_cast<int>(dof.size());

  // Alternating reachability from the unmatched doctors of D[F]: any F-edge
  // away from a doctor, only the matching edge back out of a hospital.
  std::vector<bool> seen_d(inst.num_doctors(), false), seen_h(inst.num_hospitals(), false);
  std::deque<int> queue;
  for (int d : dof)
    if (!res.maximum.doctor_edge(d)) {
      seen_d[d] = true;
      queue.push_back(d);
    }
  while (!queue.empty()) {
    int d = queue.front();
    queue.pop_front();
    for (int eid : inst.doctor_edges(d)) {
      if (!F.contains(eid)) continue;
      int h = inst.edge(eid).hospital;
      if (seen_h[h]) continue;
      seen_h[h] = true;
      if (auto me = res.maximum.hospital_edge(h)) {
        int d2 = inst.edge(*me).doctor;
        if (!seen_d[d2]) {
          seen_d[d2] = true;
          queue.push_back(d2);
        }
      }
    }
  }
  for (int d : dof)
    if (seen_d[d]) res.minimal_violator.push_back(d);

  auto gamma = hospital_neighborhood(inst, F, res.minimal_violator);
  int rho = static_cast<int>(gamma.size()) - static_cast<int>(res.minimal_violator.size());
  check_invariant(rho == res.min_rho,
                  "reachable doctor set does not attain the minimum deficiency");
  return res;
}

}  // namespace ssmc
