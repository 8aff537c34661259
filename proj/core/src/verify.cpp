#include "ssmc/verify.hpp"

#include <algorithm>
#include <array>
#include <iterator>

namespace ssmc {

std::uint64_t trial_seed(std::uint64_t seed, int k) {
  return SplitMix64(seed + static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ULL).next();
}

namespace {

struct Recorder {
  SuiteResult res;

  void fail(const std::string& what, const std::string& input) {
    ++res.failures;
    if (res.failures == 1) {
      res.first_failure = what;
      res.first_counterexample = input;
    }
  }
};

int default_trials(const std::string& suite) {
  if (suite == "preprocess" || suite == "separated" || suite == "degree2") return 2000;
  if (suite == "envy") return 1000;
  if (suite == "bipartite") return 500;
  return 100;  // sat
}

int chosen_trials(const VerifyOptions& opt, const std::string& suite) {
  return opt.trials > 0 ? opt.trials : default_trials(suite);
}

Instance draw_instance(SplitMix64& rng, GenParams p, int max_edges) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    p.seed = rng.next();
    Instance inst = gen_instance(p);
    if (inst.num_edges() <= max_edges) return inst;
  }
  throw InternalError("instance rejection loop stalled");
}

bool doctor_weakly_prefers(const Instance& inst, const Matching& a, const Matching& b) {
  for (int d = 0; d < inst.num_doctors(); ++d)
    if (compare_at_vertex(inst, Side::doctor, d, a.doctor_edge(d), b.doctor_edge(d)) ==
        Relation3::worse)
      return false;
  return true;
}

void check_preprocess_contract(const Instance& inst, const OracleBudget& budget, Recorder& rec) {
  const std::string input = inst.serialize();
  PreprocessResult pre = preprocess(inst, true);
  EdgeSet remaining = EdgeSet::all(inst) - pre.forbidden;

  if (!(pre.flat == ch(inst, remaining)))
    return rec.fail("flat set differs from the choice set of the remaining edges", input);
  if (!pre.mu.as_edge_set(inst).is_subset_of(pre.flat))
    return rec.fail("output matching leaves the flat set", input);
  if (!(pre.forbidden & block_set(inst, pre.flat)).empty())
    return rec.fail("a dropped edge destabilizes the flat set", input);

  for (int d = 0; d < inst.num_doctors(); ++d) {
    for (int e : inst.doctor_edges(d)) {
      if (!pre.forbidden.contains(e)) continue;
      for (int f : inst.doctor_edges(d))
        if (!pre.forbidden.contains(f) &&
            compare_at_vertex(inst, Side::doctor, d, e, f) == Relation3::worse)
          return rec.fail("kept edge strictly preferred to a dropped one", input);
    }
    bool has_flat = !incident_edges(inst, pre.flat, Side::doctor, d).empty();
    bool has_remaining = !incident_edges(inst, remaining, Side::doctor, d).empty();
    if (has_remaining && !pre.mu.doctor_edge(d))
      return rec.fail("doctor with remaining edges left unmatched", input);
    if (!pre.mu.doctor_edge(d) && has_flat)
      return rec.fail("unmatched doctor still holds flat edges", input);
    if (!has_flat && has_remaining)
      return rec.fail("doctor without flat edges keeps remaining edges", input);
  }

  for (const TraceStep& step : pre.trace)
    if (step.round > inst.num_edges() || step.inner > inst.num_edges())
      return rec.fail("recorded growth step beyond the edge-count bound", input);

  std::vector<Matching> stable = all_stable_matchings(inst, budget);
  for (const Matching& s : stable)
    for (int e : s.edge_ids())
      if (pre.forbidden.contains(e))
        return rec.fail("a stable matching uses a dropped edge", input);

  if (critical_hospitals(inst, pre).empty()) {
    if (!is_stable(inst, pre.mu))
      return rec.fail("calm outcome is not stable", input);
    if (stable.empty())
      return rec.fail("exhaustive search finds nothing despite a calm outcome", input);
    for (const Matching& s : stable)
      if (!doctor_weakly_prefers(inst, pre.mu, s))
        return rec.fail("calm outcome is not doctor-optimal", input);
  }
}

void check_separated_trial(const Instance& inst, const InstanceSolver& solve,
                           const OracleBudget& budget, Recorder& rec) {
  const std::string input = inst.serialize();
  std::optional<Matching> got = solve(inst);
  std::vector<Matching> stable = all_stable_matchings(inst, budget);
  if (got.has_value() != !stable.empty())
    return rec.fail("existence answer disagrees with exhaustive search", input);
  if (!got) return;
  if (!is_stable(inst, *got)) return rec.fail("returned matching is not stable", input);
  for (const Matching& s : stable)
    if (!doctor_weakly_prefers(inst, *got, s))
      return rec.fail("returned matching is not doctor-optimal", input);
}

void check_degree2_trial(const Instance& inst, const InstanceSolver& solve,
                         const OracleBudget& budget, Recorder& rec) {
  const std::string input = inst.serialize();
  std::optional<Matching> got = solve(inst);
  std::vector<Matching> stable = all_stable_matchings(inst, budget);
  if (got.has_value() != !stable.empty())
    return rec.fail("existence answer disagrees with exhaustive search", input);
  if (got && !is_stable(inst, *got)) return rec.fail("returned matching is not stable", input);

  PreprocessResult pre = preprocess(inst);
  ComponentAnalysis analysis = analyze_components(inst, pre);
  for (const ComponentInfo& comp : analysis.components) {
    const int nd = static_cast<int>(comp.doctors.size());
    const int nh = static_cast<int>(comp.hospitals.size());
    if (nd > nh) return rec.fail("component with more doctors than hospitals", input);
    int leaves = 0;
    for (int d : comp.doctors)
      if (incident_edges(inst, pre.flat, Side::doctor, d).size() == 1) ++leaves;
    switch (comp.kind) {
      case ComponentInfo::Kind::balanced:
        if (nd != nh || leaves != 0) return rec.fail("misclassified balanced component", input);
        break;
      case ComponentInfo::Kind::balanced_leaf:
        if (nd != nh || leaves != 1)
          return rec.fail("misclassified single-leaf component", input);
        break;
      case ComponentInfo::Kind::deficient:
        if (nh != nd + 1 || leaves != 0)
          return rec.fail("misclassified deficient component", input);
        break;
      case ComponentInfo::Kind::forbidden_singleton:
        if (nd != 0 || nh != 1) return rec.fail("misshapen singleton component", input);
        break;
    }
  }

  ClosureDigraph dg = build_digraph(inst, pre, analysis);
  std::vector<int> indegree(dg.node_component.size(), 0);
  for (auto& [x, y] : dg.arcs) {
    ++indegree[y];
    if (analysis.components[dg.node_component[y]].kind != ComponentInfo::Kind::balanced_leaf)
      return rec.fail("arc pointing at a component without a leaf doctor", input);
  }
  for (int v = 0; v < static_cast<int>(dg.node_component.size()); ++v) {
    if (indegree[v] > 1) return rec.fail("digraph node with two incoming arcs", input);
    const ComponentInfo& comp = analysis.components[dg.node_component[v]];
    bool all_open = std::none_of(comp.hospitals.begin(), comp.hospitals.end(),
                                 [&](int h) { return inst.is_closed(h); });
    bool expect_source = comp.kind == ComponentInfo::Kind::forbidden_singleton ||
                         (comp.kind == ComponentInfo::Kind::deficient && all_open);
    bool is_source = std::count(dg.sources.begin(), dg.sources.end(), v) > 0;
    if (expect_source != is_source) return rec.fail("wrong source set", input);
    if (is_source && indegree[v] != 0) return rec.fail("source with an incoming arc", input);
    bool expect_sink = comp.kind == ComponentInfo::Kind::balanced_leaf &&
                       inst.is_closed(comp.leaf_hospital);
    bool is_sink = std::count(dg.sinks.begin(), dg.sinks.end(), v) > 0;
    if (expect_sink != is_sink) return rec.fail("wrong sink set", input);
  }
}

void check_envy_trial(const EnvyInstance& envy, const EnvySolver& solve,
                      const OracleBudget& budget, SplitMix64& rng, Recorder& rec) {
  const std::string input = envy.serialize();
  Instance reduced = reduce_envyfree(envy);

  auto hospital_of = [&](const Matching& mu, int d) {
    auto eid = mu.doctor_edge(d);
    return eid ? std::optional<int>(reduced.edge(*eid).hospital) : std::nullopt;
  };
  auto has_envy = [&](const Matching& mu) {
    for (int d = 0; d < envy.num_doctors(); ++d) {
      auto mine = hospital_of(mu, d);
      int my_rank = mine ? envy.rank(d, *mine) : 0;
      for (int d2 = 0; d2 < envy.num_doctors(); ++d2) {
        auto theirs = hospital_of(mu, d2);
        if (d2 == d || !theirs) continue;
        int r = envy.rank(d, *theirs);
        if (r != 0 && (my_rank == 0 || r < my_rank)) return true;
      }
    }
    return false;
  };

  std::optional<Matching> got = solve(envy);
  std::optional<Matching> want = envyfree_bruteforce(envy, budget);
  if (got.has_value() != want.has_value())
    return rec.fail("existence answer disagrees with exhaustive search", input);
  if (got) {
    if (got->size() != envy.num_doctors())
      return rec.fail("returned assignment leaves a doctor out", input);
    if (has_envy(*got)) return rec.fail("returned assignment has an envious doctor", input);
  }

  // Full assignments destabilize the closed-hospital encoding exactly when
  // some doctor envies another.
  std::vector<std::vector<int>> full;
  enumerate_matchings(reduced, [&](const std::vector<int>& ids) {
    if (static_cast<int>(ids.size()) == envy.num_doctors()) full.push_back(ids);
    return true;
  }, budget);
  for (int pick = 0; pick < 3 && !full.empty(); ++pick) {
    const auto& ids = full[rng.below(full.size())];
    Matching mu = Matching::from_edge_ids(reduced, ids);
    ++rec.res.samples;
    if (has_envy(mu) != !blocking_edges(reduced, mu).empty())
      return rec.fail("envy and destabilizing edges disagree", input);
  }
}

void check_sat_trial(const B2Formula& f, const std::vector<bool>& phi, bool scan_candidates,
                     Recorder& rec) {
  const std::string input = f.serialize();
  auto [inst, map] = reduce_sat(f);

  for (int d = 0; d < inst.num_doctors(); ++d)
    if (inst.doctor_edges(d).size() > 3)
      return rec.fail("reduced instance has a doctor of degree four", input);
  for (int h = 0; h < inst.num_hospitals(); ++h)
    if (inst.hospital_edges(h).size() > 3)
      return rec.fail("reduced instance has a hospital of degree four", input);
  for (int d = 0; d < inst.num_doctors(); ++d) {
    int worst_closed = 0, best_open = 0;
    for (int eid : inst.doctor_edges(d)) {
      int r = inst.doctor_rank(eid);
      if (inst.is_closed(inst.edge(eid).hospital))
        worst_closed = std::max(worst_closed, r);
      else
        best_open = best_open == 0 ? r : std::min(best_open, r);
    }
    if (worst_closed != 0 && best_open != 0 && worst_closed >= best_open)
      return rec.fail("a doctor does not put all closed hospitals first", input);
  }

  Matching mu = assignment_to_matching(f, phi, inst, map);
  if (!is_stable(inst, mu))
    return rec.fail("encoded assignment is not a stable matching", input);
  if (matching_to_assignment(f, inst, map, mu) != phi)
    return rec.fail("assignment does not survive the round trip", input);

  if (scan_candidates) {
    ++rec.res.samples;
    CandidateScan scan = scan_sat_candidates(f, inst, map);
    long long expect = 1LL << f.num_vars;
    for (int t = 0; t < f.num_clauses(); ++t) expect *= 3;
    if (scan.candidates != expect) return rec.fail("candidate family has the wrong size", input);
    if (scan.stable == 0)
      return rec.fail("no stable candidate despite a satisfying assignment", input);
    if (!scan.stable_decode_satisfies)
      return rec.fail("a stable candidate decodes to a non-satisfying assignment", input);
  }
}

void check_bipartite_trial(const Instance& inst, const OracleBudget& budget, SplitMix64& rng,
                           Recorder& rec) {
  EdgeSet F = EdgeSet::none(inst);
  for (int e = 0; e < inst.num_edges(); ++e)
    if (rng.chance(0.7)) F.insert(e);
  const std::string input = "subset " + std::to_string(F.size()) + " of:\n" + inst.serialize();

  std::vector<int> dof = doctors_with_edges(inst, F);
  auto rho = [&](const std::vector<int>& X) {
    return static_cast<int>(hospital_neighborhood(inst, F, X).size()) -
           static_cast<int>(X.size());
  };

  DeficiencyResult res = deficiency(inst, F);
  MinimizerEnum oracle = minimizers_bruteforce(inst, F, budget);
  if (res.min_rho != oracle.min_rho)
    return rec.fail("worst deficiency disagrees with subset enumeration", input);
  if (res.nu != static_cast<int>(dof.size()) + oracle.min_rho)
    return rec.fail("maximum matching size breaks the deficiency identity", input);
  for (int e : res.maximum.edge_ids())
    if (!F.contains(e)) return rec.fail("maximum matching leaves the edge subset", input);
  if (res.maximum.size() != res.nu)
    return rec.fail("reported matching size is not the matching's size", input);

  std::vector<int> meet;
  for (size_t i = 0; i < oracle.minimizers.size(); ++i) {
    if (i == 0) {
      meet = oracle.minimizers[0];
      continue;
    }
    std::vector<int> next;
    std::set_intersection(meet.begin(), meet.end(), oracle.minimizers[i].begin(),
                          oracle.minimizers[i].end(), std::back_inserter(next));
    meet = std::move(next);
  }
  if (res.minimal_violator != meet)
    return rec.fail("minimal violator is not the meet of all minimizers", input);
  if (rho(meet) != oracle.min_rho)
    return rec.fail("meet of the minimizers is not itself a minimizer", input);

  for (int pair = 0; pair < 10; ++pair) {
    std::vector<int> X, Y, uni, inter;
    for (int d : dof) {
      bool in_x = rng.chance(0.5), in_y = rng.chance(0.5);
      if (in_x) X.push_back(d);
      if (in_y) Y.push_back(d);
      if (in_x || in_y) uni.push_back(d);
      if (in_x && in_y) inter.push_back(d);
    }
    ++rec.res.samples;
    if (rho(uni) + rho(inter) > rho(X) + rho(Y))
      return rec.fail("deficiency is not submodular", input);
  }
}

}  // namespace

SuiteResult run_preprocess_suite(const VerifyOptions& opt) {
  Recorder rec;
  rec.res.suite = "preprocess";
  const int trials = chosen_trials(opt, rec.res.suite);
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng(trial_seed(opt.seed, k));
    GenParams p;
    p.num_doctors = 2 + static_cast<int>(rng.below(4));
    p.num_hospitals = 2 + static_cast<int>(rng.below(4));
    p.edge_prob = 0.55;
    p.tie_prob = 0.35;
    p.closure_prob = 0.35;
    Instance inst = draw_instance(rng, p, 10);
    ++rec.res.trials;
    check_preprocess_contract(inst, opt.budget, rec);
  }
  return rec.res;
}

SuiteResult run_separated_suite(const VerifyOptions& opt, const InstanceSolver& solver) {
  Recorder rec;
  rec.res.suite = "separated";
  const int trials = chosen_trials(opt, rec.res.suite);
  InstanceSolver solve =
      solver ? solver : [](const Instance& inst) { return solve_separated(inst); };
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng(trial_seed(opt.seed, k));
    GenParams p;
    p.num_doctors = 1 + static_cast<int>(rng.below(5));
    p.num_hospitals = 1 + static_cast<int>(rng.below(5));
    p.edge_prob = 0.55;
    p.tie_prob = 0.35;
    p.closure_prob = 0.35;
    p.enforce_star = true;
    Instance inst = draw_instance(rng, p, 12);
    ++rec.res.trials;
    check_separated_trial(inst, solve, opt.budget, rec);
  }
  return rec.res;
}

SuiteResult run_degree2_suite(const VerifyOptions& opt, const InstanceSolver& solver) {
  Recorder rec;
  rec.res.suite = "degree2";
  const int trials = chosen_trials(opt, rec.res.suite);
  InstanceSolver solve =
      solver ? solver : [](const Instance& inst) { return solve_degree2(inst); };
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng(trial_seed(opt.seed, k));
    GenParams p;
    p.num_doctors = 1 + static_cast<int>(rng.below(6));
    p.num_hospitals = 1 + static_cast<int>(rng.below(6));
    p.edge_prob = 0.7;
    p.tie_prob = 0.35;
    p.closure_prob = 0.35;
    p.enforce_degree2 = true;
    Instance inst = draw_instance(rng, p, opt.budget.max_edges);
    ++rec.res.trials;
    check_degree2_trial(inst, solve, opt.budget, rec);
  }
  return rec.res;
}

SuiteResult run_envy_suite(const VerifyOptions& opt, const EnvySolver& solver) {
  Recorder rec;
  rec.res.suite = "envy";
  const int trials = chosen_trials(opt, rec.res.suite);
  EnvySolver solve =
      solver ? solver : [](const EnvyInstance& envy) { return solve_envyfree(envy); };
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng(trial_seed(opt.seed, k));
    GenParams p;
    p.num_doctors = 1 + static_cast<int>(rng.below(4));
    p.num_hospitals = p.num_doctors + static_cast<int>(rng.below(6 - p.num_doctors));
    p.edge_prob = 0.7;
    p.tie_prob = 0.35;
    EnvyInstance envy = [&] {
      for (int attempt = 0; attempt < 1000; ++attempt) {
        p.seed = rng.next();
        EnvyInstance candidate = gen_envy(p);
        if (candidate.total_edges() <= opt.budget.max_edges) return candidate;
      }
      throw InternalError("instance rejection loop stalled");
    }();
    ++rec.res.trials;
    check_envy_trial(envy, solve, opt.budget, rng, rec);
  }
  return rec.res;
}

SuiteResult run_sat_suite(const VerifyOptions& opt) {
  Recorder rec;
  rec.res.suite = "sat";
  const int trials = chosen_trials(opt, rec.res.suite);
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng(trial_seed(opt.seed, k));
    const int n = k % 2 == 0 ? 3 : 6;
    B2Formula f;
    std::optional<std::vector<bool>> phi;
    for (int attempt = 0; attempt < 1000 && !phi; ++attempt) {
      f = gen_b2sat(n, rng.next());
      phi = sat_bruteforce(f, opt.budget);
    }
    ++rec.res.trials;
    if (!phi) {
      rec.fail("could not draw a satisfiable formula", f.serialize());
      continue;
    }
    check_sat_trial(f, *phi, n == 3, rec);
  }
  return rec.res;
}

SuiteResult run_bipartite_suite(const VerifyOptions& opt) {
  Recorder rec;
  rec.res.suite = "bipartite";
  const int trials = chosen_trials(opt, rec.res.suite);
  for (int k = 0; k < trials; ++k) {
    SplitMix64 rng(trial_seed(opt.seed, k));
    GenParams p;
    p.num_doctors = 2 + static_cast<int>(rng.below(7));
    p.num_hospitals = 2 + static_cast<int>(rng.below(7));
    p.edge_prob = 0.5;
    p.tie_prob = 0.35;
    p.closure_prob = 0.35;
    p.seed = rng.next();
    Instance inst = gen_instance(p);
    ++rec.res.trials;
    check_bipartite_trial(inst, opt.budget, rng, rec);
  }
  return rec.res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"preprocess", "separated", "degree2",
                                              "envy",       "sat",       "bipartite"};
  return names;
}

std::optional<SuiteResult> run_suite(const std::string& mode, const VerifyOptions& opt) {
  if (mode == "preprocess") return run_preprocess_suite(opt);
  if (mode == "separated") return run_separated_suite(opt);
  if (mode == "degree2") return run_degree2_suite(opt);
  if (mode == "envy") return run_envy_suite(opt);
  if (mode == "sat") return run_sat_suite(opt);
  if (mode == "bipartite") return run_bipartite_suite(opt);
  return std::nullopt;
}

CandidateScan scan_sat_candidates(const B2Formula& f, const Instance& inst, const SatMapping&) {
  const int n = f.num_vars;
  const int m = f.num_clauses();

  auto eid = [&](const std::string& dname, const std::string& hname) {
    auto d = inst.find_doctor(dname);
    auto h = inst.find_hospital(hname);
    check_invariant(d.has_value() && h.has_value(), "candidate vertex missing");
    auto e = inst.find_edge(*d, *h);
    check_invariant(e.has_value(), "candidate edge missing");
    return *e;
  };

  std::vector<int> base, true_edge(n), false_edge(n);
  for (int i = 1; i <= n; ++i) {
    base.push_back(eid(SatMapping::var_doctor(i, 1), SatMapping::var_hospital(i)));
    true_edge[i - 1] = eid(SatMapping::var_doctor(i, 2), SatMapping::true_hospital(i));
    false_edge[i - 1] = eid(SatMapping::var_doctor(i, 2), SatMapping::false_hospital(i));
  }
  std::vector<std::array<int, 3>> hub(m), guard(m);
  std::vector<std::array<int, 2>> spare(m);
  std::vector<int> tail(m);
  for (int t = 1; t <= m; ++t) {
    for (int j = 1; j <= 3; ++j) {
      hub[t - 1][j - 1] = eid(SatMapping::clause_doctor(t, j), SatMapping::literal_hub(t, j));
      guard[t - 1][j - 1] = eid(SatMapping::clause_doctor(t, j), SatMapping::guard_hospital(t, j));
    }
    spare[t - 1] = {eid(SatMapping::clause_doctor(t, 4), SatMapping::hub_hospital(t, 1)),
                    eid(SatMapping::clause_doctor(t, 4), SatMapping::hub_hospital(t, 2))};
    tail[t - 1] = eid(SatMapping::clause_doctor(t, 5), SatMapping::hub_hospital(t, 3));
  }

  CandidateScan scan;
  long long patterns = 1;
  for (int t = 0; t < m; ++t) patterns *= 3;

  std::vector<int> ids;
  for (long long bits = 0; bits < (1LL << n); ++bits) {
    for (long long pat = 0; pat < patterns; ++pat) {
      ids = base;
      for (int i = 0; i < n; ++i)
        ids.push_back((bits >> i) & 1 ? false_edge[i] : true_edge[i]);
      long long rest = pat;
      for (int t = 0; t < m; ++t) {
        int j = static_cast<int>(rest % 3);
        rest /= 3;
        ids.push_back(hub[t][j]);
        for (int j2 = 0; j2 < 3; ++j2)
          if (j2 != j) ids.push_back(guard[t][j2]);
        ids.push_back(spare[t][j == 0 ? 1 : 0]);
        ids.push_back(tail[t]);
      }
      auto mu = Matching::try_from_edge_ids(inst, ids);
      check_invariant(mu.has_value(), "candidate edges do not form a matching");
      ++scan.candidates;
      if (!is_stable(inst, *mu)) continue;
      ++scan.stable;
      std::vector<bool> phi(n);
      for (int i = 0; i < n; ++i) phi[i] = (bits >> i) & 1;
      if (!f.satisfied_by(phi)) scan.stable_decode_satisfies = false;
    }
  }
  return scan;
}

}  // namespace ssmc
