#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssmc/edge_set.hpp"

namespace ssmc {

// A matching: a set of edges with every vertex on at most one of them.
// Edge ids are kept sorted, so equality and serialization are canonical.
class Matching {
 public:
  Matching() = default;

  static Matching from_edge_ids(const Instance& inst, std::vector<int> edge_ids);
  static std::optional<Matching> try_from_edge_ids(const Instance& inst,
                                                   const std::vector<int>& edge_ids);

  const std::vector<int>& edge_ids() const { return edge_ids_; }
  int size() const { return static_cast<int>(edge_ids_.size()); }
  bool contains(int eid) const;

  // Edge id matched at a vertex, if any.
  std::optional<int> doctor_edge(int d) const {
    return by_doctor_[d] < 0 ? std::nullopt : std::optional<int>(by_doctor_[d]);
  }
  std::optional<int> hospital_edge(int h) const {
    return by_hospital_[h] < 0 ? std::nullopt : std::optional<int>(by_hospital_[h]);
  }
  std::optional<int> vertex_edge(Side s, int v) const {
    return s == Side::doctor ? doctor_edge(v) : hospital_edge(v);
  }

  EdgeSet as_edge_set(const Instance& inst) const { return EdgeSet::of(inst, edge_ids_); }

  // One "<doctor> <hospital>" line per edge, canonical order.
  std::string serialize(const Instance& inst) const;
  static Matching parse(const Instance& inst, const std::string& text);

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.edge_ids_ == b.edge_ids_;
  }

 private:
  std::vector<int> edge_ids_;
  std::vector<int> by_doctor_;
  std::vector<int> by_hospital_;
};

bool is_matching(const Instance& inst, const std::vector<int>& edge_ids);

// How an edge outside a matching relates to it at both endpoints. An edge
// blocks when it is weakly preferred on both sides and strictly preferred on
// at least one; a closed hospital only cooperates while it is matched.
struct BlockReport {
  int edge = -1;
  bool weak_doctor = false;
  bool strong_doctor = false;
  bool weak_hospital = false;
  bool strong_hospital = false;
  bool blocks = false;
};

BlockReport block_report(const Instance& inst, const Matching& mu, int eid);
std::vector<BlockReport> blocking_edges(const Instance& inst, const Matching& mu);
bool is_stable(const Instance& inst, const Matching& mu);

}  // namespace ssmc
