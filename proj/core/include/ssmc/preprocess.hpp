#pragma once

#include <optional>

#include "ssmc/bipartite.hpp"
#include "ssmc/calculus.hpp"

namespace ssmc {

// One growth event of the forbidden set.
struct TraceStep {
  enum class Kind {
    dominated,       // edges strictly below a doctor's best remaining group
    hall_violator,   // edges of the smallest worst Hall violator
    block_edge,      // flat-set edges at the hospital of a self-blocking edge
  };
  int round = 0;  // outer iteration, 1-based
  int inner = 0;  // inner iteration within the round, 1-based
  Kind kind;
  std::vector<int> added;             // edge ids, ascending
  std::optional<int> block_edge;      // the chosen self-blocking edge
};

// Fixed point of the forbidden-edge computation:
//   forbidden: edges no stable matching can use,
//   flat:      the choice set of the remaining edges,
//   mu:        a maximum matching inside flat, saturating the doctors that
//              still have allowed edges.
struct PreprocessResult {
  EdgeSet forbidden;
  Matching mu;
  EdgeSet flat;
  std::vector<TraceStep> trace;   // only filled when requested
  int rounds = 0;                 // outer iterations run
  int max_inner = 0;              // largest inner iteration count of any round
};

PreprocessResult preprocess(const Instance& inst, bool keep_trace = false);

// Hospitals that keep the result from being a stable matching: open
// hospitals left unmatched by mu that either carry an edge of the flat set
// or lost an incident edge to the forbidden set.
std::vector<int> critical_hospitals(const Instance& inst, const PreprocessResult& res);

// When no hospital is critical, mu is stable and simultaneously best
// possible for every doctor; otherwise the critical set explains the refusal.
struct CalmOutcome {
  std::optional<Matching> matching;
  std::vector<int> critical;
};

CalmOutcome doctor_optimal_when_calm(const Instance& inst, const PreprocessResult& res);

}  // namespace ssmc
