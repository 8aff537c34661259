#include "ssmc/stability.hpp"

#include <algorithm>
#include <sstream>

#include "ssmc/calculus.hpp"

namespace ssmc {

bool is_matching(const Instance& inst, const std::vector<int>& edge_ids) {
  std::vector<bool> d_used(inst.num_doctors(), false), h_used(inst.num_hospitals(), false);
  for (int eid : edge_ids) {
    if (eid < 0 || eid >= inst.num_edges()) return false;
    const Edge& e = inst.edge(eid);
    if (d_used[e.doctor] || h_used[e.hospital]) return false;
    d_used[e.doctor] = true;
    h_used[e.hospital] = true;
  }
  return true;
}

Matching Matching::from_edge_ids(const Instance& inst, std::vector<int> edge_ids) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  require(is_matching(inst, edge_ids), errc::not_matching, "edge set is not a matching");
  Matching m;
  m.edge_ids_ = std::move(edge_ids);
  m.by_doctor_.assign(inst.num_doctors(), -1);
  m.by_hospital_.assign(inst.num_hospitals(), -1);
  for (int eid : m.edge_ids_) {
    m.by_doctor_[inst.edge(eid).doctor] = eid;
    m.by_hospital_[inst.edge(eid).hospital] = eid;
  }
  return m;
}

std::optional<Matching> Matching::try_from_edge_ids(const Instance& inst,
                                                    const std::vector<int>& edge_ids) {
  if (!is_matching(inst, edge_ids)) return std::nullopt;
  return from_edge_ids(inst, edge_ids);
}

bool Matching::contains(int eid) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), eid);
}

std::string Matching::serialize(const Instance& inst) const {
  std::ostringstream out;
  for (int eid : edge_ids_) out << inst.edge_label(eid) << '\n';
  return out.str();
}

Matching Matching::parse(const Instance& inst, const std::string& text) {
  std::vector<int> ids;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string dname, hname, extra;
    if (!(line >> dname)) continue;
    require(bool(line >> hname) && !(line >> extra), errc::syntax,
            "line " + std::to_string(lineno) + ": expected '<doctor> <hospital>'");
    auto d = inst.find_doctor(dname);
    require(d.has_value(), errc::unknown_id, "unknown doctor '" + dname + "'");
    auto h = inst.find_hospital(hname);
    require(h.has_value(), errc::unknown_id, "unknown hospital '" + hname + "'");
    auto eid = inst.find_edge(*d, *h);
    require(eid.has_value(), errc::edge_not_in_e,
            "'" + dname + " " + hname + "' is not an edge of the instance");
    ids.push_back(*eid);
  }
  return from_edge_ids(inst, std::move(ids));
}

BlockReport block_report(const Instance& inst, const Matching& mu, int eid) {
  require(eid >= 0 && eid < inst.num_edges(), errc::edge_not_in_e,
          "edge id " + std::to_string(eid) + " out of range");
  require(!mu.contains(eid), errc::edge_in_matching,
          "edge " + inst.edge_label(eid) + " is in the matching");
  const Edge& e = inst.edge(eid);

  BlockReport r;
  r.edge = eid;

  auto cmp_d = compare_at_vertex(inst, Side::doctor, e.doctor, eid, mu.doctor_edge(e.doctor));
  r.weak_doctor = cmp_d != Relation3::worse;
  r.strong_doctor = cmp_d == Relation3::better;

  auto mu_h = mu.hospital_edge(e.hospital);
  if (inst.is_closed(e.hospital) && !mu_h) {
    // A closed hospital with no partner does not cooperate with any change.
    r.weak_hospital = r.strong_hospital = false;
  } else {
    auto cmp_h = compare_at_vertex(inst, Side::hospital, e.hospital, eid, mu_h);
    r.weak_hospital = cmp_h != Relation3::worse;
    r.strong_hospital = cmp_h == Relation3::better;
  }

  r.blocks = r.weak_doctor && r.weak_hospital && (r.strong_doctor || r.strong_hospital);
  return r;
}

std::vector<BlockReport> blocking_edges(const Instance& inst, const Matching& mu) {
  std::vector<BlockReport> out;
  for (int eid = 0; eid < inst.num_edges(); ++eid) {
    if (mu.contains(eid)) continue;
    BlockReport r = block_report(inst, mu, eid);
    if (r.blocks) out.push_back(r);
  }
  return out;
}

bool is_stable(const Instance& inst, const Matching& mu) {
  for (int eid = 0; eid < inst.num_edges(); ++eid) {
    if (mu.contains(eid)) continue;
    if (block_report(inst, mu, eid).blocks) return false;
  }
  return true;
}

}  // namespace ssmc
