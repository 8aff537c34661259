#include "ssmc/oracle.hpp"

#include <algorithm>

namespace ssmc {

namespace {

struct MatchingEnum {
  const Instance& inst;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<bool> d_used, h_used;
  std::vector<int> current;
  bool stopped = false;

  // Extends by edge ids above `from` only, so matchings are produced in
  // lexicographic order of their sorted id sequences.
  void walk(int from) {
    if (stopped) return;
    if (!visit(current)) {
      stopped = true;
      return;
    }
    for (int eid = from; eid < inst.num_edges() && !stopped; ++eid) {
      const Edge& e = inst.edge(eid);
      if (d_used[e.doctor] || h_used[e.hospital]) continue;
      d_used[e.doctor] = h_used[e.hospital] = true;
      current.push_back(eid);
      walk(eid + 1);
      current.pop_back();
      d_used[e.doctor] = h_used[e.hospital] = false;
    }
  }
};

}  // namespace

void enumerate_matchings(const Instance& inst,
                         const std::function<bool(const std::vector<int>&)>& visit,
                         const OracleBudget& budget) {
  require(inst.num_edges() <= budget.max_edges, errc::budget,
          "instance has " + std::to_string(inst.num_edges()) + " edges, budget is " +
              std::to_string(budget.max_edges));
  MatchingEnum en{inst, visit,
                  std::vector<bool>(inst.num_doctors(), false),
                  std::vector<bool>(inst.num_hospitals(), false),
                  {}};
  en.walk(0);
}

std::vector<Matching> all_stable_matchings(const Instance& inst, const OracleBudget& budget) {
  std::vector<Matching> out;
  enumerate_matchings(
      inst,
      [&](const std::vector<int>& ids) {
        Matching mu = Matching::from_edge_ids(inst, ids);
        if (is_stable(inst, mu)) out.push_back(std::move(mu));
        return true;
      },
      budget);
  return out;
}

int EnvyInstance::total_edges() const {
  int n = 0;
  for (int d = 0; d < num_doctors(); ++d)
    for (const auto& g : prefs_[d].groups) n += static_cast<int>(g.size());
  return n;
}

namespace {

struct EnvySearch {
  const EnvyInstance& envy;
  std::vector<int> assigned;  // doctor -> hospital, -1 while unset
  std::vector<bool> h_used;

  bool has_envy() const {
    for (int d = 0; d < envy.num_doctors(); ++d)
      for (int d2 = 0; d2 < envy.num_doctors(); ++d2) {
        if (d == d2) continue;
        int own = envy.rank(d, assigned[d]);
        int their = envy.rank(d, assigned[d2]);
        if (their != 0 && their < own) return true;
      }
    return false;
  }

  // Doctors take hospitals in index order, so the first success is the
  // canonically smallest envy-free full assignment.
  std::optional<Matching> search(int d, const Instance& as_graph) {
    if (d == envy.num_doctors()) {
      if (has_envy()) return std::nullopt;
      std::vector<int> ids;
      for (int i = 0; i < envy.num_doctors(); ++i)
        ids.push_back(*as_graph.find_edge(i, assigned[i]));
      return Matching::from_edge_ids(as_graph, std::move(ids));
    }
    std::vector<int> options;
    for (const auto& g : envy.pref_groups(d))
      for (int h : g) options.push_back(h);
    std::sort(options.begin(), options.end());
    for (int h : options) {
      if (h_used[h]) continue;
      h_used[h] = true;
      assigned[d] = h;
      if (auto found = search(d + 1, as_graph)) return found;
      assigned[d] = -1;
      h_used[h] = false;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Matching> envyfree_bruteforce(const EnvyInstance& envy, const OracleBudget& budget) {
  require(envy.total_edges() <= budget.max_edges, errc::budget,
          "envy instance has " + std::to_string(envy.total_edges()) + " edges, budget is " +
              std::to_string(budget.max_edges));
  Instance as_graph = reduce_envyfree(envy);
  EnvySearch search{envy, std::vector<int>(envy.num_doctors(), -1),
                    std::vector<bool>(envy.num_hospitals(), false)};
  return search.search(0, as_graph);
}

std::optional<std::vector<bool>> sat_bruteforce(const B2Formula& f, const OracleBudget& budget) {
  require(f.num_vars <= budget.max_sat_vars, errc::budget,
          "formula has " + std::to_string(f.num_vars) + " variables, budget is " +
              std::to_string(budget.max_sat_vars));
  const int n = f.num_vars;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<bool> phi(n);
    for (int i = 0; i < n; ++i) phi[i] = (mask >> (n - 1 - i)) & 1;
    if (f.satisfied_by(phi)) return phi;
  }
  return std::nullopt;
}

MinimizerEnum minimizers_bruteforce(const Instance& inst, const EdgeSet& F,
                                    const OracleBudget& budget) {
  std::vector<int> dof = doctors_with_edges(inst, F);
  const int k = static_cast<int>(dof.size());
  require(k <= budget.max_doctors, errc::budget,
          "F touches " + std::to_string(k) + " doctors, budget is " +
              std::to_string(budget.max_doctors));

  MinimizerEnum out;
  out.min_rho = 0;  // rho of the empty set
  std::vector<std::vector<int>> best{{}};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> doctors;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) doctors.push_back(dof[i]);
    int rho = static_cast<int>(hospital_neighborhood(inst, F, doctors).size()) -
              static_cast<int>(doctors.size());
    if (rho < out.min_rho) {
      out.min_rho = rho;
      best.clear();
    }
    if (rho == out.min_rho) best.push_back(std::move(doctors));
  }
  std::sort(best.begin(), best.end());
  out.minimizers = std::move(best);
  return out;
}

}  // namespace ssmc
