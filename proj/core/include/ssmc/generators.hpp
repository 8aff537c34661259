#pragma once

#include <cstdint>

#include "ssmc/reductions.hpp"

namespace ssmc {

// The one PRNG used for all generated inputs. The sequence is fixed at the
// bit level so identical seeds give identical bytes on every platform:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ z>>30) * 0xbf58476d1ce4e5b9
//   z = (z ^ z>>27) * 0x94d049bb133111eb; return z ^ z>>31
// Derived draws are defined below in terms of next() only.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // next() mod bound; bound must be positive. The slight modulo bias is
  // irrelevant for test-instance generation and keeps the draw portable.
  std::uint64_t below(std::uint64_t bound);

  // True with probability p, from the top 53 bits of one draw.
  bool chance(double p);

  // Fisher-Yates from the back, one below() per step.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t seed = 0;
  int num_doctors = 4;
  int num_hospitals = 4;
  int max_degree = -1;        // cap on doctor degree, -1 for none
  double edge_prob = 0.5;     // chance a doctor picks up each hospital
  double tie_prob = 0.3;      // chance two neighboring rank groups merge
  double closure_prob = 0.3;  // chance a hospital is closed
  bool enforce_star = false;     // doctors rank all open hospitals above closed ones
  bool enforce_degree2 = false;  // cap doctor degree at two
};

// Deterministic: equal params (seed included) give byte-identical
// serializations. Draw order is closed set, then per-doctor edges, then
// per-doctor tie structure, then per-hospital tie structure.
Instance gen_instance(const GenParams& params);

// Random formula with every variable twice positive and twice negative:
// the 4n occurrence tokens are shuffled into the 4n/3 clause slots,
// reshuffling while any clause repeats a literal. num_vars must be a
// positive multiple of three.
B2Formula gen_b2sat(int num_vars, std::uint64_t seed);

// Random one-sided preference lists over a subset of the hospitals.
EnvyInstance gen_envy(const GenParams& params);

}  // namespace ssmc
