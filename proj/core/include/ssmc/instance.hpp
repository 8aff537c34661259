#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ssmc/error.hpp"

namespace ssmc {

enum class Side { doctor, hospital };

inline Side other(Side s) { return s == Side::doctor ? Side::hospital : Side::doctor; }

struct Edge {
  int doctor = -1;
  int hospital = -1;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Preference of one vertex: tie groups over incident partners, best group
// first. Partners are vertex indices of the opposite side, sorted within
// each group.
struct PrefOrder {
  std::vector<std::vector<int>> groups;
  friend bool operator==(const PrefOrder&, const PrefOrder&) = default;
};

// Name-level description used to build an Instance. Preference groups are
// given per vertex name, best group first.
struct InstanceData {
  std::vector<std::string> doctors;
  std::vector<std::string> hospitals;
  std::vector<std::string> closed;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> prefs;
};

bool valid_id(std::string_view token);

// An immutable matching instance: bipartite graph between doctors and
// hospitals, a total preorder with ties per vertex over its incident edges,
// and a set of closed hospitals. Vertices are kept sorted by name and edges
// in (doctor, hospital) lexicographic order, so indices, edge ids, and all
// derived iteration orders are canonical.
class Instance {
 public:
  Instance() = default;

  static Instance make(InstanceData data);
  static Instance parse(const std::string& text);
  std::string serialize() const;

  // Same graph and preferences with a different closed set (names).
  Instance with_closed(std::vector<std::string> closed) const;

  int num_doctors() const { return static_cast<int>(doctors_.size()); }
  int num_hospitals() const { return static_cast<int>(hospitals_.size()); }
  int num_vertices(Side s) const { return s == Side::doctor ? num_doctors() : num_hospitals(); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::string& doctor_name(int d) const { return doctors_[d]; }
  const std::string& hospital_name(int h) const { return hospitals_[h]; }
  const std::string& vertex_name(Side s, int v) const {
    return s == Side::doctor ? doctors_[v] : hospitals_[v];
  }
  const std::vector<std::string>& doctor_names() const { return doctors_; }
  const std::vector<std::string>& hospital_names() const { return hospitals_; }

  std::optional<int> find_doctor(std::string_view name) const;
  std::optional<int> find_hospital(std::string_view name) const;

  bool is_closed(int h) const { return closed_mask_[h]; }
  const std::vector<int>& closed_hospitals() const { return closed_; }

  const Edge& edge(int eid) const { return edges_[eid]; }
  std::optional<int> find_edge(int d, int h) const;
  int endpoint(Side s, int eid) const {
    return s == Side::doctor ? edges_[eid].doctor : edges_[eid].hospital;
  }

  // Incident edge ids in canonical order.
  const std::vector<int>& doctor_edges(int d) const { return doctor_edges_[d]; }
  const std::vector<int>& hospital_edges(int h) const { return hospital_edges_[h]; }
  const std::vector<int>& vertex_edges(Side s, int v) const {
    return s == Side::doctor ? doctor_edges_[v] : hospital_edges_[v];
  }

  // 1-based tie-group rank of an edge at one of its endpoints; lower is
  // better. The unmatched option ranks below every edge.
  int doctor_rank(int eid) const { return rank_d_[eid]; }
  int hospital_rank(int eid) const { return rank_h_[eid]; }
  int rank_at(Side s, int eid) const { return s == Side::doctor ? rank_d_[eid] : rank_h_[eid]; }

  const PrefOrder& doctor_pref(int d) const { return doctor_prefs_[d]; }
  const PrefOrder& hospital_pref(int h) const { return hospital_prefs_[h]; }

  std::string edge_label(int eid) const {
    return doctors_[edges_[eid].doctor] + " " + hospitals_[edges_[eid].hospital];
  }

  bool operator==(const Instance& o) const {
    return doctors_ == o.doctors_ && hospitals_ == o.hospitals_ && closed_ == o.closed_ &&
           doctor_prefs_ == o.doctor_prefs_ && hospital_prefs_ == o.hospital_prefs_;
  }

 private:
  std::vector<std::string> doctors_;
  std::vector<std::string> hospitals_;
  std::vector<int> closed_;
  std::vector<bool> closed_mask_;
  std::vector<PrefOrder> doctor_prefs_;
  std::vector<PrefOrder> hospital_prefs_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> doctor_edges_;
  std::vector<std::vector<int>> hospital_edges_;
  std::vector<int> rank_d_;
  std::vector<int> rank_h_;
};

}  // namespace ssmc
