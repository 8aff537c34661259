#pragma once

#include <optional>

#include "ssmc/edge_set.hpp"

namespace ssmc {

// Three-way comparison against a vertex's preference order; `better` means
// strictly preferred by that vertex.
enum class Relation3 { better, tied, worse };

// Compare two options at a vertex: each option is an incident edge id or
// nullopt for staying unmatched. Every edge beats unmatched; unmatched ties
// with itself.
Relation3 compare_at_vertex(const Instance& inst, Side side, int v, std::optional<int> e,
                            std::optional<int> f);

// Most preferred F-edges at one vertex (empty when F(v) is empty).
EdgeSet ch_at_vertex(const Instance& inst, Side side, int v, const EdgeSet& F);

// Union over all doctors (hospitals) of their choice sets.
EdgeSet ch_doctors(const Instance& inst, const EdgeSet& F);
EdgeSet ch_hospitals(const Instance& inst, const EdgeSet& F);

// Ch(F) = Ch_H(Ch_D(F)); always flat.
EdgeSet ch(const Instance& inst, const EdgeSet& F);

// Whether all F-edges at every vertex are pairwise tied.
bool is_flat(const Instance& inst, const EdgeSet& F);

// Position of an edge relative to a flat set at one endpoint. On the doctor
// side an empty F(d) makes any edge `better`. On the hospital side F(h) must
// be nonempty; any member represents the (flat) group.
Relation3 rel_to_flat(const Instance& inst, int eid, Side side, const EdgeSet& F);

// Edges outside a flat set F that would destabilize it: e = (d, h) with
// F(h) nonempty, e at least tied with F at d, and e strictly better at the
// other endpoint than it is tied at (strictly better at d requires at least
// tied at h; tied at d requires strictly better at h).
EdgeSet block_set(const Instance& inst, const EdgeSet& F);

}  // namespace ssmc
