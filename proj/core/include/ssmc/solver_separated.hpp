#pragma once

#include "ssmc/preprocess.hpp"

namespace ssmc {

// Whether every doctor strictly prefers all of its open hospitals to all of
// its closed ones.
bool satisfies_star(const Instance& inst);

struct SeparatedResult {
  std::optional<Matching> matching;   // engaged iff a stable matching exists
  PreprocessResult pre;
  std::vector<int> critical;          // nonempty iff the answer is negative
};

// Decision + construction for instances passing satisfies_star. The
// returned matching is doctor-optimal among all stable matchings.
SeparatedResult solve_separated_full(const Instance& inst);
std::optional<Matching> solve_separated(const Instance& inst);

}  // namespace ssmc
