#pragma once

#include "ssmc/preprocess.hpp"

namespace ssmc {

// A connected component of the graph (D, H; flat), classified by shape.
// Components of interest:
//   balanced            |D_X| = |H_X|, every doctor has two flat-set edges
//   balanced_leaf       |D_X| = |H_X| with one doctor on a single flat edge
//   deficient           |D_X| + 1 = |H_X|; the flat edges form a tree
//   forbidden_singleton a lone open hospital whose incident edges are all
//                       forbidden
struct ComponentInfo {
  enum class Kind { balanced, balanced_leaf, deficient, forbidden_singleton };
  Kind kind;
  std::vector<int> doctors;    // ascending
  std::vector<int> hospitals;  // ascending
  // balanced_leaf only:
  int leaf_doctor = -1;    // the doctor with a single flat edge
  int leaf_hospital = -1;  // its flat-set partner
  int alt_hospital = -1;   // its other neighbor in E, -1 when degree 1
};

struct ComponentAnalysis {
  std::vector<ComponentInfo> components;
  std::vector<int> component_of_hospital;  // -1 when in no listed component
};

// Requires every doctor to have at most two incident edges.
ComponentAnalysis analyze_components(const Instance& inst, const PreprocessResult& pre);

// Perfect matching between the doctors of a deficient component and its
// hospitals minus the given root: each doctor takes the endpoint of its
// tree edge that is farther from the root.
Matching tree_matching(const Instance& inst, const EdgeSet& flat, const ComponentInfo& comp,
                       int root_hospital);

// Digraph over the classified components. An arc X -> Y says the leaf
// doctor of Y can move to its alternative hospital inside X without
// creating a blocking edge there; the unmatched slot this frees at Y's
// leaf hospital can then be passed along. Heads are always balanced_leaf
// components, so every node has at most one incoming arc.
struct ClosureDigraph {
  std::vector<int> node_component;         // node -> index into components
  std::vector<std::pair<int, int>> arcs;   // (tail node, head node), sorted
  std::vector<int> sources;                // deficient all-open + forbidden singletons
  std::vector<int> sinks;                  // balanced_leaf with a closed leaf hospital
};

ClosureDigraph build_digraph(const Instance& inst, const PreprocessResult& pre,
                             const ComponentAnalysis& analysis);

struct Degree2Result {
  std::optional<Matching> matching;
  PreprocessResult pre;
  std::vector<int> critical;
  // Engaged when the critical set is nonempty:
  std::optional<ComponentAnalysis> analysis;
  std::optional<ClosureDigraph> digraph;
};

// Full solver for instances whose doctors all have degree at most two.
// A stable matching exists iff every digraph source reaches a sink.
Degree2Result solve_degree2_full(const Instance& inst);
std::optional<Matching> solve_degree2(const Instance& inst);

}  // namespace ssmc
