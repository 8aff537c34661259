#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ssmc/instance.hpp"

namespace ssmc {

// A subset of an instance's edges, stored as a bitset over edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe)
      : universe_(universe), bits_((universe + 63) / 64, 0) {}

  static EdgeSet none(const Instance& inst) { return EdgeSet(inst.num_edges()); }
  static EdgeSet all(const Instance& inst) {
    EdgeSet s(inst.num_edges());
    for (int e = 0; e < inst.num_edges(); ++e) s.insert(e);
    return s;
  }
  static EdgeSet of(const Instance& inst, const std::vector<int>& edge_ids) {
    EdgeSet s(inst.num_edges());
    for (int e : edge_ids) s.insert(e);
    return s;
  }

  int universe() const { return universe_; }
  bool contains(int eid) const { return (bits_[eid >> 6] >> (eid & 63)) & 1; }
  void insert(int eid) { bits_[eid >> 6] |= std::uint64_t{1} << (eid & 63); }
  void erase(int eid) { bits_[eid >> 6] &= ~(std::uint64_t{1} << (eid & 63)); }

  int size() const {
    int n = 0;
    for (auto w : bits_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }

  EdgeSet& operator|=(const EdgeSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  EdgeSet& subtract(const EdgeSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~o.bits_[i];
    return *this;
  }

  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a.subtract(b); }
  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }

  bool is_subset_of(const EdgeSet& o) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  std::vector<int> ids() const {
    std::vector<int> out;
    for (int e = 0; e < universe_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

// F(v): ids of F-edges incident to a vertex, canonical order.
std::vector<int> incident_edges(const Instance& inst, const EdgeSet& F, Side side, int v);

// D[F]: doctors with at least one F-edge, ascending.
std::vector<int> doctors_with_edges(const Instance& inst, const EdgeSet& F);

// Γ_F(X): hospitals adjacent in F to a doctor set, ascending.
std::vector<int> hospital_neighborhood(const Instance& inst, const EdgeSet& F,
                                       const std::vector<int>& doctors);

}  // namespace ssmc
