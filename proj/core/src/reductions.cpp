#include "ssmc/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "parse_util.hpp"
#include "ssmc/solver_separated.hpp"

namespace ssmc {

B2Formula B2Formula::make(int num_vars, std::vector<std::array<int, 3>> clauses) {
  require(num_vars >= 0, errc::bad_n, "negative variable count");
  B2Formula f;
  f.num_vars = num_vars;
  f.clauses = std::move(clauses);

  std::vector<int> pos(num_vars + 1, 0), neg(num_vars + 1, 0);
  for (int t = 0; t < f.num_clauses(); ++t) {
    std::set<int> lits;
    bool complementary = false;
    for (int lit : f.clauses[t]) {
      int v = std::abs(lit);
      require(v >= 1 && v <= num_vars, errc::syntax,
              "literal " + std::to_string(lit) + " out of range in clause " + std::to_string(t + 1));
      require(lits.insert(lit).second, errc::clause_size,
              "duplicate literal " + std::to_string(lit) + " in clause " + std::to_string(t + 1));
      if (lits.count(-lit)) complementary = true;
      (lit > 0 ? pos : neg)[v]++;
    }
    if (complementary) f.complementary_clauses.push_back(t);
  }
  for (int v = 1; v <= num_vars; ++v)
    require(pos[v] == 2 && neg[v] == 2, errc::occurrence,
            "variable " + std::to_string(v) + " occurs " + std::to_string(pos[v]) +
                " times positively and " + std::to_string(neg[v]) + " times negatively");
  return f;
}

B2Formula B2Formula::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<std::array<int, 3>> clauses;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream line(raw);
    std::string first;
    if (!(line >> first)) continue;
    if (first == "c") continue;
    auto at = [&](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
    if (first == "p") {
      require(n < 0, errc::syntax, at("duplicate header"));
      std::string kind;
      require(bool(line >> kind >> n >> m) && kind == "b2sat" && n >= 0 && m >= 0, errc::syntax,
              at("expected 'p b2sat <n> <m>'"));
      continue;
    }
    require(n >= 0, errc::syntax, at("clause before header"));
    std::array<int, 3> clause;
    int terminator;
    std::istringstream cl(raw);
    require(bool(cl >> clause[0] >> clause[1] >> clause[2] >> terminator) && terminator == 0,
            errc::syntax, at("expected three literals and a terminating 0"));
    std::string extra;
    require(!(cl >> extra), errc::syntax, at("trailing tokens after clause"));
    for (int lit : clause)
      require(lit != 0, errc::syntax, at("zero literal inside clause"));
    clauses.push_back(clause);
  }
  require(n >= 0, errc::syntax, "missing 'p b2sat' header");
  require(static_cast<int>(clauses.size()) == m, errc::syntax,
          "header declares " + std::to_string(m) + " clauses, found " +
              std::to_string(clauses.size()));
  return make(n, std::move(clauses));
}

std::string B2Formula::serialize() const {
  std::ostringstream out;
  out << "p b2sat " << num_vars << ' ' << num_clauses() << '\n';
  for (const auto& c : clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

bool B2Formula::satisfied_by(const std::vector<bool>& phi) const {
  require(static_cast<int>(phi.size()) == num_vars, errc::syntax,
          "assignment has " + std::to_string(phi.size()) + " values for " +
              std::to_string(num_vars) + " variables");
  for (const auto& c : clauses) {
    bool sat = false;
    for (int lit : c)
      if (phi[std::abs(lit) - 1] == (lit > 0)) {
        sat = true;
        break;
      }
    if (!sat) return false;
  }
  return true;
}

std::string SatMapping::var_doctor(int i, int k) {
  return "d_" + std::to_string(i) + "." + std::to_string(k);
}
std::string SatMapping::var_hospital(int i) { return "h_" + std::to_string(i) + ".1"; }
std::string SatMapping::true_hospital(int i) { return "t_" + std::to_string(i); }
std::string SatMapping::false_hospital(int i) { return "f_" + std::to_string(i); }
std::string SatMapping::clause_doctor(int t, int j) {
  return "p_" + std::to_string(t) + "." + std::to_string(j);
}
std::string SatMapping::guard_hospital(int t, int j) {
  return "s_" + std::to_string(t) + "." + std::to_string(j);
}
std::string SatMapping::hub_hospital(int t, int j) {
  return "q_" + std::to_string(t) + "." + std::to_string(j);
}
std::string SatMapping::literal_hub(int t, int j) { return hub_hospital(t, j == 1 ? 1 : 2); }

std::string SatMapping::serialize() const {
  std::ostringstream out;
  out << "# reduction name map\n";
  out << "n " << num_vars << '\n';
  out << "m " << num_clauses << '\n';
  for (int i = 1; i <= num_vars; ++i)
    out << "var " << i << ": d1=" << var_doctor(i, 1) << " d2=" << var_doctor(i, 2)
        << " h1=" << var_hospital(i) << " t=" << true_hospital(i) << " f=" << false_hospital(i)
        << '\n';
  for (int t = 1; t <= num_clauses; ++t) {
    out << "clause " << t << ':';
    for (int j = 1; j <= 5; ++j) out << " p" << j << '=' << clause_doctor(t, j);
    for (int j = 1; j <= 3; ++j) out << " s" << j << '=' << guard_hospital(t, j);
    for (int j = 1; j <= 3; ++j) out << " q" << j << '=' << hub_hospital(t, j);
    out << '\n';
  }
  return out.str();
}

std::pair<Instance, SatMapping> reduce_sat(const B2Formula& f) {
  const int n = f.num_vars, m = f.num_clauses();
  SatMapping map;
  map.num_vars = n;
  map.num_clauses = m;

  // Occurrence slots per polarity, in clause order: exactly two each.
  std::vector<std::vector<std::pair<int, int>>> pos(n + 1), neg(n + 1);
  for (int t = 0; t < m; ++t)
    for (int j = 0; j < 3; ++j) {
      int lit = f.clauses[t][j];
      (lit > 0 ? pos : neg)[std::abs(lit)].push_back({t + 1, j + 1});
    }

  InstanceData data;
  auto pref = [&](std::string vertex, std::vector<std::vector<std::string>> groups) {
    data.prefs.emplace_back(std::move(vertex), std::move(groups));
  };

  for (int i = 1; i <= n; ++i) {
    data.doctors.push_back(SatMapping::var_doctor(i, 1));
    data.doctors.push_back(SatMapping::var_doctor(i, 2));
    data.hospitals.push_back(SatMapping::var_hospital(i));
    data.hospitals.push_back(SatMapping::true_hospital(i));
    data.hospitals.push_back(SatMapping::false_hospital(i));
    data.closed.push_back(SatMapping::true_hospital(i));
    data.closed.push_back(SatMapping::false_hospital(i));

    pref(SatMapping::var_doctor(i, 1), {{SatMapping::var_hospital(i)}});
    pref(SatMapping::var_doctor(i, 2),
         {{SatMapping::true_hospital(i), SatMapping::false_hospital(i)},
          {SatMapping::var_hospital(i)}});
    pref(SatMapping::var_hospital(i),
         {{SatMapping::var_doctor(i, 1), SatMapping::var_doctor(i, 2)}});
    // The literal hospitals admit their occurrence doctors ahead of the
    // variable doctor, and are indifferent between the two occurrences.
    auto occurrence_pref = [&](const std::vector<std::pair<int, int>>& occ) {
      std::vector<std::string> first;
      for (auto [t, j] : occ) first.push_back(SatMapping::clause_doctor(t, j));
      std::sort(first.begin(), first.end());
      return std::vector<std::vector<std::string>>{std::move(first),
                                                   {SatMapping::var_doctor(i, 2)}};
    };
    pref(SatMapping::true_hospital(i), occurrence_pref(pos[i]));
    pref(SatMapping::false_hospital(i), occurrence_pref(neg[i]));
  }

  for (int t = 1; t <= m; ++t) {
    for (int j = 1; j <= 5; ++j) data.doctors.push_back(SatMapping::clause_doctor(t, j));
    for (int j = 1; j <= 3; ++j) {
      data.hospitals.push_back(SatMapping::guard_hospital(t, j));
      data.hospitals.push_back(SatMapping::hub_hospital(t, j));
      data.closed.push_back(SatMapping::guard_hospital(t, j));
    }
    for (int j = 1; j <= 3; ++j) {
      int lit = f.clauses[t - 1][j - 1];
      std::string lit_hospital = lit > 0 ? SatMapping::true_hospital(std::abs(lit))
                                         : SatMapping::false_hospital(std::abs(lit));
      pref(SatMapping::clause_doctor(t, j), {{SatMapping::guard_hospital(t, j)},
                                             {std::move(lit_hospital)},
                                             {SatMapping::literal_hub(t, j)}});
      pref(SatMapping::guard_hospital(t, j), {{SatMapping::clause_doctor(t, j)}});
    }
    pref(SatMapping::clause_doctor(t, 4),
         {{SatMapping::hub_hospital(t, 1), SatMapping::hub_hospital(t, 2)}});
    pref(SatMapping::clause_doctor(t, 5),
         {{SatMapping::hub_hospital(t, 1), SatMapping::hub_hospital(t, 3)}});
    pref(SatMapping::hub_hospital(t, 1),
         {{SatMapping::clause_doctor(t, 1), SatMapping::clause_doctor(t, 4),
           SatMapping::clause_doctor(t, 5)}});
    pref(SatMapping::hub_hospital(t, 2),
         {{SatMapping::clause_doctor(t, 2), SatMapping::clause_doctor(t, 3),
           SatMapping::clause_doctor(t, 4)}});
    pref(SatMapping::hub_hospital(t, 3), {{SatMapping::clause_doctor(t, 5)}});
  }

  Instance inst = Instance::make(std::move(data));
  for (Side side : {Side::doctor, Side::hospital})
    for (int v = 0; v < inst.num_vertices(side); ++v)
      check_invariant(inst.vertex_edges(side, v).size() <= 3,
                      "reduction produced a vertex of degree above three");
  return {std::move(inst), map};
}

Matching assignment_to_matching(const B2Formula& f, const std::vector<bool>& phi,
                                const Instance& inst, const SatMapping&) {
  require(f.satisfied_by(phi), errc::unsat_assignment,
          "assignment does not satisfy the formula");
  std::vector<int> ids;
  auto add = [&](const std::string& dname, const std::string& hname) {
    auto d = inst.find_doctor(dname);
    auto h = inst.find_hospital(hname);
    check_invariant(d && h, "mapped vertex missing from the reduced instance");
    auto eid = inst.find_edge(*d, *h);
    check_invariant(eid.has_value(), "mapped edge missing from the reduced instance");
    ids.push_back(*eid);
  };

  for (int i = 1; i <= f.num_vars; ++i) {
    add(SatMapping::var_doctor(i, 1), SatMapping::var_hospital(i));
    add(SatMapping::var_doctor(i, 2),
        phi[i - 1] ? SatMapping::false_hospital(i) : SatMapping::true_hospital(i));
  }
  for (int t = 1; t <= f.num_clauses(); ++t) {
    int jt = 0;
    for (int j = 1; j <= 3 && jt == 0; ++j) {
      int lit = f.clauses[t - 1][j - 1];
      if (phi[std::abs(lit) - 1] == (lit > 0)) jt = j;
    }
    check_invariant(jt != 0, "satisfied formula with an unwitnessed clause");
    for (int j = 1; j <= 3; ++j) {
      if (j == jt)
        add(SatMapping::clause_doctor(t, j), SatMapping::literal_hub(t, j));
      else
        add(SatMapping::clause_doctor(t, j), SatMapping::guard_hospital(t, j));
    }
    add(SatMapping::clause_doctor(t, 4), SatMapping::hub_hospital(t, jt == 1 ? 2 : 1));
    add(SatMapping::clause_doctor(t, 5), SatMapping::hub_hospital(t, 3));
  }
  Matching mu = Matching::from_edge_ids(inst, std::move(ids));
  check_invariant(is_stable(inst, mu), "encoded assignment is not stable");
  return mu;
}

std::vector<bool> matching_to_assignment(const B2Formula& f, const Instance& inst,
                                         const SatMapping&, const Matching& mu) {
  std::vector<bool> phi(f.num_vars);
  for (int i = 1; i <= f.num_vars; ++i) {
    auto d = inst.find_doctor(SatMapping::var_doctor(i, 2));
    check_invariant(d.has_value(), "mapped vertex missing from the reduced instance");
    auto me = mu.doctor_edge(*d);
    require(me.has_value(), errc::not_canonical,
            "'" + SatMapping::var_doctor(i, 2) + "' is unmatched");
    const std::string& partner = inst.hospital_name(inst.edge(*me).hospital);
    if (partner == SatMapping::true_hospital(i))
      phi[i - 1] = false;
    else if (partner == SatMapping::false_hospital(i))
      phi[i - 1] = true;
    else
      fail(errc::not_canonical, "'" + SatMapping::var_doctor(i, 2) +
                                    "' is matched to neither literal hospital");
  }
  return phi;
}

EnvyInstance EnvyInstance::make(Data data) {
  EnvyInstance envy;
  envy.doctors_ = detail::sorted_unique_ids(std::move(data.doctors), "doctor");
  envy.hospitals_ = detail::sorted_unique_ids(std::move(data.hospitals), "hospital");
  for (const auto& d : envy.doctors_)
    require(!detail::index_of(envy.hospitals_, d), errc::dup_id,
            "id '" + d + "' is used as both a doctor and a hospital");

  envy.prefs_.assign(envy.num_doctors(), {});
  std::vector<bool> seen(envy.num_doctors(), false);
  for (auto& [name, raw_groups] : data.prefs) {
    auto d = detail::index_of(envy.doctors_, name);
    if (!d) {
      require(!detail::index_of(envy.hospitals_, name).has_value(), errc::syntax,
              "hospitals take no pref line in this format ('" + name + "')");
      fail(errc::unknown_id, "pref line for undeclared vertex '" + name + "'");
    }
    require(!seen[*d], errc::syntax, "duplicate pref line for '" + name + "'");
    seen[*d] = true;
    PrefOrder order;
    std::set<int> used;
    for (auto& group : raw_groups) {
      std::vector<int> members;
      for (auto& hospital : group) {
        auto h = detail::index_of(envy.hospitals_, hospital);
        require(h.has_value(), errc::unknown_id,
                "pref of '" + name + "' lists '" + hospital + "', which is not a hospital");
        require(used.insert(*h).second, errc::dup_pref_entry,
                "pref of '" + name + "' lists '" + hospital + "' twice");
        members.push_back(*h);
      }
      std::sort(members.begin(), members.end());
      order.groups.push_back(std::move(members));
    }
    envy.prefs_[*d] = std::move(order);
  }
  for (int d = 0; d < envy.num_doctors(); ++d)
    require(seen[d], errc::syntax, "missing pref line for doctor '" + envy.doctors_[d] + "'");

  envy.ranks_.assign(envy.num_doctors(), std::vector<int>(envy.num_hospitals(), 0));
  for (int d = 0; d < envy.num_doctors(); ++d) {
    int rank = 0;
    for (const auto& g : envy.prefs_[d].groups) {
      ++rank;
      for (int h : g) envy.ranks_[d][h] = rank;
    }
  }
  return envy;
}

EnvyInstance EnvyInstance::parse(const std::string& text) {
  Data data;
  bool saw_doctors = false, saw_hospitals = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip(raw);
    if (line.empty()) continue;
    auto at = [&](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
    if (line.rfind("doctors:", 0) == 0) {
      require(!saw_doctors, errc::syntax, at("duplicate doctors section"));
      saw_doctors = true;
      data.doctors = detail::split_ids(line.substr(8), "doctor");
    } else if (line.rfind("hospitals:", 0) == 0) {
      require(!saw_hospitals, errc::syntax, at("duplicate hospitals section"));
      saw_hospitals = true;
      data.hospitals = detail::split_ids(line.substr(10), "hospital");
    } else if (line.rfind("closed:", 0) == 0) {
      fail(errc::syntax, at("this format has no closed section"));
    } else if (line.rfind("pref ", 0) == 0) {
      auto colon = line.find(':');
      require(colon != std::string::npos, errc::syntax, at("pref line without ':'"));
      std::string name = detail::strip(line.substr(5, colon - 5));
      require(valid_id(name), errc::syntax, at("bad vertex id in pref line"));
      data.prefs.emplace_back(name, detail::parse_groups(line.substr(colon + 1), name));
    } else {
      fail(errc::syntax, at("unrecognized line '" + line + "'"));
    }
  }
  require(saw_doctors, errc::syntax, "missing doctors section");
  require(saw_hospitals, errc::syntax, "missing hospitals section");
  return make(std::move(data));
}

std::string EnvyInstance::serialize() const {
  std::ostringstream out;
  out << "doctors:";
  for (const auto& d : doctors_) out << ' ' << d;
  out << "\nhospitals:";
  for (const auto& h : hospitals_) out << ' ' << h;
  out << '\n';
  for (int d = 0; d < num_doctors(); ++d) {
    out << "pref " << doctors_[d] << ':';
    for (size_t g = 0; g < prefs_[d].groups.size(); ++g) {
      if (g > 0) out << " >";
      for (size_t i = 0; i < prefs_[d].groups[g].size(); ++i) {
        if (i > 0) out << " =";
        out << ' ' << hospitals_[prefs_[d].groups[g][i]];
      }
    }
    out << '\n';
  }
  return out.str();
}

Instance reduce_envyfree(const EnvyInstance& envy) {
  InstanceData data;
  data.doctors = envy.doctor_names();
  data.hospitals = envy.hospital_names();
  data.closed = envy.hospital_names();
  std::vector<std::vector<std::string>> admitted(envy.num_hospitals());
  for (int d = 0; d < envy.num_doctors(); ++d) {
    std::vector<std::vector<std::string>> groups;
    for (const auto& g : envy.pref_groups(d)) {
      std::vector<std::string> names;
      for (int h : g) {
        names.push_back(envy.hospital_name(h));
        admitted[h].push_back(envy.doctor_name(d));
      }
      groups.push_back(std::move(names));
    }
    data.prefs.emplace_back(envy.doctor_name(d), std::move(groups));
  }
  for (int h = 0; h < envy.num_hospitals(); ++h) {
    std::vector<std::vector<std::string>> groups;
    if (!admitted[h].empty()) groups.push_back(admitted[h]);
    data.prefs.emplace_back(envy.hospital_name(h), std::move(groups));
  }
  return Instance::make(std::move(data));
}

EnvyResult solve_envyfree_full(const EnvyInstance& envy) {
  EnvyResult res{std::nullopt, reduce_envyfree(envy), {}};
  SeparatedResult sep = solve_separated_full(res.reduced);
  res.pre = std::move(sep.pre);
  check_invariant(sep.matching.has_value(),
                  "all-closed instance refused; no hospital can be critical");
  if (sep.matching->size() == envy.num_doctors()) res.matching = std::move(sep.matching);
  return res;
}

std::optional<Matching> solve_envyfree(const EnvyInstance& envy) {
  return solve_envyfree_full(envy).matching;
}

}  // namespace ssmc
