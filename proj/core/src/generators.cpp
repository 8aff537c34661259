#include "ssmc/generators.hpp"

#include <algorithm>
#include <cmath>

namespace ssmc {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  check_invariant(bound > 0, "empty range for a random draw");
  return next() % bound;
}

bool SplitMix64::chance(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

namespace {

// Zero-padded numeric ids sort the same way numerically and
// lexicographically.
std::string padded_id(char prefix, int index, int count) {
  int width = 1;
  for (int v = count - 1; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

// Splits an ordered partner list into tie groups: each neighbor joins the
// previous group with probability tie_prob.
std::vector<std::vector<std::string>> tie_groups(SplitMix64& rng, double tie_prob,
                                                 const std::vector<std::string>& ordered) {
  std::vector<std::vector<std::string>> groups;
  for (const auto& name : ordered) {
    if (groups.empty() || !rng.chance(tie_prob))
      groups.push_back({name});
    else
      groups.back().push_back(name);
  }
  return groups;
}

}  // namespace

Instance gen_instance(const GenParams& params) {
  require(params.num_doctors >= 0 && params.num_hospitals >= 0, errc::bad_n,
          "negative vertex count");
  SplitMix64 rng(params.seed);

  std::vector<std::string> doctors, hospitals;
  for (int d = 0; d < params.num_doctors; ++d)
    doctors.push_back(padded_id('d', d, params.num_doctors));
  for (int h = 0; h < params.num_hospitals; ++h)
    hospitals.push_back(padded_id('h', h, params.num_hospitals));

  std::vector<bool> closed(params.num_hospitals);
  for (int h = 0; h < params.num_hospitals; ++h) closed[h] = rng.chance(params.closure_prob);

  int cap = params.max_degree < 0 ? params.num_hospitals : params.max_degree;
  if (params.enforce_degree2) cap = std::min(cap, 2);

  // Edges: every doctor scans the hospitals in a fresh random order and
  // keeps each with edge_prob until its degree cap fills up.
  std::vector<std::vector<int>> partners(params.num_doctors);
  std::vector<std::vector<int>> admitted(params.num_hospitals);
  std::vector<int> order(params.num_hospitals);
  for (int h = 0; h < params.num_hospitals; ++h) order[h] = h;
  for (int d = 0; d < params.num_doctors; ++d) {
    std::vector<int> scan = order;
    rng.shuffle(scan);
    for (int h : scan) {
      if (static_cast<int>(partners[d].size()) >= cap) break;
      if (rng.chance(params.edge_prob)) {
        partners[d].push_back(h);
        admitted[h].push_back(d);
      }
    }
  }

  InstanceData data;
  data.doctors = doctors;
  data.hospitals = hospitals;
  for (int h = 0; h < params.num_hospitals; ++h)
    if (closed[h]) data.closed.push_back(hospitals[h]);

  for (int d = 0; d < params.num_doctors; ++d) {
    std::vector<std::string> open_part, closed_part;
    std::vector<int> shuffled = partners[d];
    rng.shuffle(shuffled);
    for (int h : shuffled) (closed[h] ? closed_part : open_part).push_back(hospitals[h]);
    std::vector<std::vector<std::string>> groups;
    if (params.enforce_star) {
      // All open hospitals strictly above all closed ones; ties never
      // bridge the boundary.
      for (auto& g : tie_groups(rng, params.tie_prob, open_part)) groups.push_back(std::move(g));
      for (auto& g : tie_groups(rng, params.tie_prob, closed_part)) groups.push_back(std::move(g));
    } else {
      std::vector<std::string> all;
      for (int h : shuffled) all.push_back(hospitals[h]);
      groups = tie_groups(rng, params.tie_prob, all);
    }
    data.prefs.emplace_back(doctors[d], std::move(groups));
  }
  for (int h = 0; h < params.num_hospitals; ++h) {
    std::vector<std::string> names;
    std::vector<int> shuffled = admitted[h];
    rng.shuffle(shuffled);
    for (int d : shuffled) names.push_back(doctors[d]);
    data.prefs.emplace_back(hospitals[h], tie_groups(rng, params.tie_prob, names));
  }
  return Instance::make(std::move(data));
}

B2Formula gen_b2sat(int num_vars, std::uint64_t seed) {
  require(num_vars > 0 && num_vars % 3 == 0, errc::bad_n,
          "variable count must be a positive multiple of three");
  const int m = 4 * num_vars / 3;
  SplitMix64 rng(seed);

  std::vector<int> tokens;
  for (int v = 1; v <= num_vars; ++v) {
    tokens.push_back(v);
    tokens.push_back(v);
    tokens.push_back(-v);
    tokens.push_back(-v);
  }

  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> deal = tokens;
    rng.shuffle(deal);
    bool ok = true;
    std::vector<std::array<int, 3>> clauses(m);
    for (int t = 0; t < m && ok; ++t) {
      for (int j = 0; j < 3; ++j) clauses[t][j] = deal[3 * t + j];
      ok = clauses[t][0] != clauses[t][1] && clauses[t][0] != clauses[t][2] &&
           clauses[t][1] != clauses[t][2];
    }
    if (ok) return B2Formula::make(num_vars, std::move(clauses));
  }
  throw InternalError("could not deal a duplicate-free formula");
}

EnvyInstance gen_envy(const GenParams& params) {
  require(params.num_doctors >= 0 && params.num_hospitals >= 0, errc::bad_n,
          "negative vertex count");
  SplitMix64 rng(params.seed);

  EnvyInstance::Data data;
  for (int d = 0; d < params.num_doctors; ++d)
    data.doctors.push_back(padded_id('d', d, params.num_doctors));
  for (int h = 0; h < params.num_hospitals; ++h)
    data.hospitals.push_back(padded_id('h', h, params.num_hospitals));

  int cap = params.max_degree < 0 ? params.num_hospitals : params.max_degree;
  std::vector<int> order(params.num_hospitals);
  for (int h = 0; h < params.num_hospitals; ++h) order[h] = h;
  for (int d = 0; d < params.num_doctors; ++d) {
    std::vector<int> scan = order;
    rng.shuffle(scan);
    std::vector<std::string> picked;
    for (int h : scan) {
      if (static_cast<int>(picked.size()) >= cap) break;
      if (rng.chance(params.edge_prob)) picked.push_back(data.hospitals[h]);
    }
    data.prefs.emplace_back(data.doctors[d], tie_groups(rng, params.tie_prob, picked));
  }
  return EnvyInstance::make(std::move(data));
}

}  // namespace ssmc
