#include "ssmc/solver_degree2.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ssmc {

namespace {

int flat_degree(const Instance& inst, const EdgeSet& flat, Side side, int v) {
  int n = 0;
  for (int eid : inst.vertex_edges(side, v))
    if (flat.contains(eid)) ++n;
  return n;
}

}  // namespace

ComponentAnalysis analyze_components(const Instance& inst, const PreprocessResult& pre) {
  for (int d = 0; d < inst.num_doctors(); ++d)
    require(inst.doctor_edges(d).size() <= 2, errc::degree_bound,
            "doctor '" + inst.doctor_name(d) + "' has more than two incident edges");

  const EdgeSet& flat = pre.flat;
  ComponentAnalysis out;
  out.component_of_hospital.assign(inst.num_hospitals(), -1);

  // Components of (D, H; flat) with at least two vertices, discovered in
  // canonical vertex order (doctors first).
  std::vector<bool> seen_d(inst.num_doctors(), false), seen_h(inst.num_hospitals(), false);
  auto explore = [&](int d0) {
    ComponentInfo comp;
    comp.kind = ComponentInfo::Kind::balanced;
    std::deque<std::pair<Side, int>> queue{{Side::doctor, d0}};
    seen_d[d0] = true;
    while (!queue.empty()) {
      auto [side, v] = queue.front();
      queue.pop_front();
      (side == Side::doctor ? comp.doctors : comp.hospitals).push_back(v);
      for (int eid : inst.vertex_edges(side, v)) {
        if (!flat.contains(eid)) continue;
        int w = inst.endpoint(other(side), eid);
        auto& seen = side == Side::doctor ? seen_h : seen_d;
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back({other(side), w});
        }
      }
    }
    std::sort(comp.doctors.begin(), comp.doctors.end());
    std::sort(comp.hospitals.begin(), comp.hospitals.end());
    return comp;
  };

  for (int d = 0; d < inst.num_doctors(); ++d) {
    if (seen_d[d] || flat_degree(inst, flat, Side::doctor, d) == 0) continue;
    ComponentInfo comp = explore(d);
    const int nd = static_cast<int>(comp.doctors.size());
    const int nh = static_cast<int>(comp.hospitals.size());
    check_invariant(nd <= nh, "component with more doctors than hospitals");
    if (nd == nh) {
      std::vector<int> leaves;
      for (int cd : comp.doctors)
        if (flat_degree(inst, flat, Side::doctor, cd) == 1) leaves.push_back(cd);
      check_invariant(leaves.size() <= 1, "balanced component with two leaf doctors");
      if (leaves.size() == 1) {
        comp.kind = ComponentInfo::Kind::balanced_leaf;
        comp.leaf_doctor = leaves.front();
        for (int eid : inst.doctor_edges(comp.leaf_doctor)) {
          int h = inst.edge(eid).hospital;
          if (flat.contains(eid))
            comp.leaf_hospital = h;
          else
            comp.alt_hospital = h;
        }
        check_invariant(comp.leaf_hospital >= 0, "leaf doctor without a flat-set partner");
      }
    } else {
      comp.kind = ComponentInfo::Kind::deficient;
      check_invariant(nh == nd + 1, "deficient component is not a tree");
      for (int cd : comp.doctors)
        check_invariant(flat_degree(inst, flat, Side::doctor, cd) == 2,
                        "deficient component with a degree-one doctor");
    }
    for (int h : comp.hospitals)
      out.component_of_hospital[h] = static_cast<int>(out.components.size());
    out.components.push_back(std::move(comp));
  }

  // Lone open hospitals kept empty purely by forbidden edges.
  for (int h = 0; h < inst.num_hospitals(); ++h) {
    if (inst.is_closed(h) || flat_degree(inst, flat, Side::hospital, h) > 0) continue;
    bool has_forbidden = false;
    for (int eid : inst.hospital_edges(h))
      if (pre.forbidden.contains(eid)) {
        has_forbidden = true;
        break;
      }
    if (!has_forbidden) continue;
    ComponentInfo comp;
    comp.kind = ComponentInfo::Kind::forbidden_singleton;
    comp.hospitals = {h};
    out.component_of_hospital[h] = static_cast<int>(out.components.size());
    out.components.push_back(std::move(comp));
  }
  return out;
}

Matching tree_matching(const Instance& inst, const EdgeSet& flat, const ComponentInfo& comp,
                       int root_hospital) {
  check_invariant(comp.kind == ComponentInfo::Kind::deficient,
                  "tree matching asked of a non-deficient component");
  check_invariant(std::binary_search(comp.hospitals.begin(), comp.hospitals.end(), root_hospital),
                  "root hospital is outside the component");

  // Walk the tree on the component's hospitals (one edge per doctor) from
  // the root; each doctor is matched to the endpoint discovered through it.
  std::vector<int> ids;
  std::set<int> seen{root_hospital}, used_doctors;
  std::deque<int> queue{root_hospital};
  while (!queue.empty()) {
    int h = queue.front();
    queue.pop_front();
    for (int eid : inst.hospital_edges(h)) {
      if (!flat.contains(eid)) continue;
      int d = inst.edge(eid).doctor;
      if (used_doctors.count(d)) continue;
      for (int eid2 : inst.doctor_edges(d)) {
        if (!flat.contains(eid2) || eid2 == eid) continue;
        int h2 = inst.edge(eid2).hospital;
        if (seen.insert(h2).second) {
          used_doctors.insert(d);
          ids.push_back(eid2);
          queue.push_back(h2);
        }
      }
    }
  }
  check_invariant(ids.size() == comp.doctors.size(), "tree walk missed a doctor");
  return Matching::from_edge_ids(inst, std::move(ids));
}

ClosureDigraph build_digraph(const Instance& inst, const PreprocessResult& pre,
                             const ComponentAnalysis& analysis) {
  ClosureDigraph dg;
  std::vector<int> node_of_component(analysis.components.size(), -1);
  for (size_t c = 0; c < analysis.components.size(); ++c) {
    if (analysis.components[c].kind == ComponentInfo::Kind::balanced) continue;
    node_of_component[c] = static_cast<int>(dg.node_component.size());
    dg.node_component.push_back(static_cast<int>(c));
  }

  auto hospital_rank_of = [&](int d, int h) {
    auto eid = inst.find_edge(d, h);
    check_invariant(eid.has_value(), "expected edge is missing");
    return inst.hospital_rank(*eid);
  };

  for (int y = 0; y < static_cast<int>(dg.node_component.size()); ++y) {
    const ComponentInfo& Y = analysis.components[dg.node_component[y]];
    if (Y.kind != ComponentInfo::Kind::balanced_leaf || Y.alt_hospital < 0) continue;
    const int dy = Y.leaf_doctor, hy = Y.leaf_hospital, alt = Y.alt_hospital;
    // The move must cost the leaf doctor something; otherwise staying put
    // can never be enforced by the rest of the graph.
    if (inst.doctor_rank(*inst.find_edge(dy, hy)) >= inst.doctor_rank(*inst.find_edge(dy, alt)))
      continue;
    int cx = analysis.component_of_hospital[alt];
    if (cx < 0 || cx == dg.node_component[y]) continue;
    int x = node_of_component[cx];
    if (x < 0) continue;
    const ComponentInfo& X = analysis.components[cx];
    bool ok = false;
    switch (X.kind) {
      case ComponentInfo::Kind::balanced_leaf:
        // Only the slot of X's own leaf hospital can be handed over, and
        // the hospital must strictly gain by the exchange.
        ok = X.leaf_hospital == alt &&
             hospital_rank_of(dy, alt) < hospital_rank_of(X.leaf_doctor, alt);
        break;
      case ComponentInfo::Kind::deficient: {
        // The hospital must weakly prefer the incomer to its flat group.
        int rep = -1;
        for (int eid : inst.hospital_edges(alt))
          if (pre.flat.contains(eid)) {
            rep = eid;
            break;
          }
        check_invariant(rep >= 0, "deficient component hospital without flat edges");
        ok = hospital_rank_of(dy, alt) <= inst.hospital_rank(rep);
        break;
      }
      case ComponentInfo::Kind::forbidden_singleton: {
        // Every forbidden edge at the hospital must stay non-blocking once
        // the hospital is matched to the incomer.
        ok = true;
        for (int eid : inst.hospital_edges(alt)) {
          if (!pre.forbidden.contains(eid)) continue;
          int d = inst.edge(eid).doctor;
          auto cmp = compare_at_vertex(inst, Side::doctor, d, eid, pre.mu.doctor_edge(d));
          check_invariant(cmp != Relation3::worse,
                          "forbidden edge below its doctor's matched edge");
          int need = hospital_rank_of(dy, alt) - inst.hospital_rank(eid);
          ok = cmp == Relation3::tied ? need <= 0 : need < 0;
          if (!ok) break;
        }
        break;
      }
      case ComponentInfo::Kind::balanced:
        break;
    }
    if (ok) dg.arcs.emplace_back(x, y);
  }
  std::sort(dg.arcs.begin(), dg.arcs.end());

  std::vector<int> indegree(dg.node_component.size(), 0);
  for (auto& [x, y] : dg.arcs) ++indegree[y];
  for (int v = 0; v < static_cast<int>(dg.node_component.size()); ++v) {
    check_invariant(indegree[v] <= 1, "digraph node with two incoming arcs");
    const ComponentInfo& comp = analysis.components[dg.node_component[v]];
    switch (comp.kind) {
      case ComponentInfo::Kind::deficient: {
        bool all_open = std::none_of(comp.hospitals.begin(), comp.hospitals.end(),
                                     [&](int h) { return inst.is_closed(h); });
        if (all_open) {
          check_invariant(indegree[v] == 0, "source component with an incoming arc");
          dg.sources.push_back(v);
        }
        break;
      }
      case ComponentInfo::Kind::forbidden_singleton:
        check_invariant(indegree[v] == 0, "source component with an incoming arc");
        dg.sources.push_back(v);
        break;
      case ComponentInfo::Kind::balanced_leaf:
        if (inst.is_closed(comp.leaf_hospital)) dg.sinks.push_back(v);
        break;
      case ComponentInfo::Kind::balanced:
        break;
    }
  }
  return dg;
}

namespace {

// Breadth-first path from a source to the first sink reached, as component
// node indices; empty when no sink is reachable.
std::vector<int> find_path(const ClosureDigraph& dg, int source,
                           const std::vector<bool>& is_sink) {
  std::vector<int> parent(dg.node_component.size(), -1);
  std::vector<bool> seen(dg.node_component.size(), false);
  std::deque<int> queue{source};
  seen[source] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (is_sink[v]) {
      std::vector<int> path{v};
      while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (auto& [x, y] : dg.arcs) {
      if (x != v || seen[y]) continue;
      seen[y] = true;
      parent[y] = v;
      queue.push_back(y);
    }
  }
  return {};
}

}  // namespace

Degree2Result solve_degree2_full(const Instance& inst) {
  Degree2Result res;
  res.pre = preprocess(inst);
  ComponentAnalysis probe = analyze_components(inst, res.pre);  // also checks the degree bound
  res.critical = critical_hospitals(inst, res.pre);
  if (res.critical.empty()) {
    check_invariant(is_stable(inst, res.pre.mu), "calm result matching is not stable");
    res.matching = res.pre.mu;
    return res;
  }
  res.analysis = std::move(probe);
  const ComponentAnalysis& analysis = *res.analysis;
  res.digraph = build_digraph(inst, res.pre, analysis);
  const ClosureDigraph& dg = *res.digraph;

  std::vector<bool> is_sink(dg.node_component.size(), false);
  for (int v : dg.sinks) is_sink[v] = true;

  std::vector<std::vector<int>> paths;
  for (int s : dg.sources) {
    std::vector<int> path = find_path(dg, s, is_sink);
    if (path.empty()) return res;  // this source cannot be relieved
    paths.push_back(std::move(path));
  }

  // Assemble the certificate: re-root every deficient component so that its
  // unmatched hospital is either closed or the first handover target, then
  // walk each path moving leaf doctors to their alternative hospitals.
  std::set<int> sigma;
  for (int eid : res.pre.mu.edge_ids()) sigma.insert(eid);

  std::vector<int> root_of(analysis.components.size(), -1);
  for (const auto& path : paths) {
    const ComponentInfo& first = analysis.components[dg.node_component[path.front()]];
    if (first.kind == ComponentInfo::Kind::deficient) {
      check_invariant(path.size() >= 2, "path with a deficient source has no second node");
      const ComponentInfo& second = analysis.components[dg.node_component[path[1]]];
      root_of[dg.node_component[path.front()]] = second.alt_hospital;
    }
  }
  for (size_t c = 0; c < analysis.components.size(); ++c) {
    const ComponentInfo& comp = analysis.components[c];
    if (comp.kind != ComponentInfo::Kind::deficient) continue;
    int root = root_of[c];
    if (root < 0) {
      // Not a source: park the hole at the smallest closed hospital.
      for (int h : comp.hospitals)
        if (inst.is_closed(h)) {
          root = h;
          break;
        }
      check_invariant(root >= 0, "deficient non-source component with no closed hospital");
    }
    for (int d : comp.doctors) {
      auto me = res.pre.mu.doctor_edge(d);
      check_invariant(me.has_value(), "unmatched doctor in a deficient component");
      sigma.erase(*me);
    }
    Matching rerooted = tree_matching(inst, res.pre.flat, comp, root);
    for (int eid : rerooted.edge_ids()) sigma.insert(eid);
  }

  std::vector<bool> used(analysis.components.size(), false);
  for (const auto& path : paths) {
    for (int v : path) {
      check_invariant(!used[dg.node_component[v]], "handover paths share a component");
      used[dg.node_component[v]] = true;
    }
    for (size_t j = 1; j < path.size(); ++j) {
      const ComponentInfo& Y = analysis.components[dg.node_component[path[j]]];
      int leave = *inst.find_edge(Y.leaf_doctor, Y.leaf_hospital);
      int enter = *inst.find_edge(Y.leaf_doctor, Y.alt_hospital);
      check_invariant(sigma.erase(leave) == 1, "leaf doctor was not matched to its leaf hospital");
      sigma.insert(enter);
    }
  }

  Matching cert = Matching::from_edge_ids(inst, std::vector<int>(sigma.begin(), sigma.end()));
  check_invariant(is_stable(inst, cert), "assembled certificate is not stable");
  res.matching = std::move(cert);
  return res;
}

std::optional<Matching> solve_degree2(const Instance& inst) {
  return solve_degree2_full(inst).matching;
}

}  // namespace ssmc
