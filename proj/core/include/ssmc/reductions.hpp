#pragma once

#include <array>
#include <string>
#include <vector>

#include "ssmc/preprocess.hpp"

namespace ssmc {

// A 3-CNF formula in which every variable occurs exactly twice positively
// and exactly twice negatively (so the clause count is 4n/3). Literals are
// +v / -v with 1-based variable indices.
struct B2Formula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
  // Clauses containing both a literal and its negation; legal but usually a
  // symptom of a degenerate input, so they are reported rather than refused.
  std::vector<int> complementary_clauses;

  static B2Formula make(int num_vars, std::vector<std::array<int, 3>> clauses);
  // "p b2sat <n> <m>" header, then one clause per line: three nonzero
  // literals and a terminating 0. Lines starting with 'c' are comments.
  static B2Formula parse(const std::string& text);
  std::string serialize() const;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  bool satisfied_by(const std::vector<bool>& phi) const;
};

// Name map of the instance produced by reduce_sat. All names are formulaic
// in the 1-based variable index i and clause index t.
struct SatMapping {
  int num_vars = 0;
  int num_clauses = 0;

  // Variable gadget i: two doctors sharing a plain hospital, plus a closed
  // "true" and a closed "false" hospital for the second doctor.
  static std::string var_doctor(int i, int k);    // d_<i>.<k>, k in {1, 2}
  static std::string var_hospital(int i);         // h_<i>.1
  static std::string true_hospital(int i);        // t_<i>
  static std::string false_hospital(int i);       // f_<i>

  // Clause gadget t: five doctors, three closed guard hospitals, three open
  // hub hospitals.
  static std::string clause_doctor(int t, int j);    // p_<t>.<j>, j in 1..5
  static std::string guard_hospital(int t, int j);   // s_<t>.<j>, j in 1..3
  static std::string hub_hospital(int t, int j);     // q_<t>.<j>, j in 1..3

  // The hub a literal doctor falls back to: hub 1 for the first literal,
  // hub 2 otherwise.
  static std::string literal_hub(int t, int j);

  std::string serialize() const;  // sidecar map file
};

// Builds the matching instance whose stable matchings encode satisfying
// assignments of the formula. Every doctor in it strictly prefers closed
// hospitals to open ones, and no vertex has degree above three.
std::pair<Instance, SatMapping> reduce_sat(const B2Formula& f);

// Canonical stable matching encoding a satisfying assignment phi: each
// second variable doctor takes the "true" hospital when its variable is
// false and vice versa, and in each clause the lowest-index true literal's
// doctor takes its hub. Rejects phi that does not satisfy the formula.
Matching assignment_to_matching(const B2Formula& f, const std::vector<bool>& phi,
                                const Instance& inst, const SatMapping& map);

// Reads an assignment back out of a matching that pairs every second
// variable doctor with its "true" or "false" hospital.
std::vector<bool> matching_to_assignment(const B2Formula& f, const Instance& inst,
                                         const SatMapping& map, const Matching& mu);

// One-sided preference lists: doctors rank hospitals, hospitals are
// indifferent. The question is whether all doctors can be matched with no
// doctor preferring another doctor's hospital over its own.
class EnvyInstance {
 public:
  struct Data {
    std::vector<std::string> doctors;
    std::vector<std::string> hospitals;
    std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> prefs;
  };

  static EnvyInstance make(Data data);
  static EnvyInstance parse(const std::string& text);
  std::string serialize() const;

  int num_doctors() const { return static_cast<int>(doctors_.size()); }
  int num_hospitals() const { return static_cast<int>(hospitals_.size()); }
  const std::string& doctor_name(int d) const { return doctors_[d]; }
  const std::string& hospital_name(int h) const { return hospitals_[h]; }
  const std::vector<std::string>& doctor_names() const { return doctors_; }
  const std::vector<std::string>& hospital_names() const { return hospitals_; }
  // Tie groups of hospital indices, best first.
  const std::vector<std::vector<int>>& pref_groups(int d) const { return prefs_[d].groups; }
  // 1-based rank of a hospital in a doctor's list, 0 when not listed.
  int rank(int d, int h) const { return ranks_[d][h]; }
  int total_edges() const;

 private:
  std::vector<std::string> doctors_;
  std::vector<std::string> hospitals_;
  std::vector<PrefOrder> prefs_;
  std::vector<std::vector<int>> ranks_;
};

// Same doctors and hospitals; hospitals become a single closed tie group
// over their neighbors, so stability collapses to the absence of envy.
Instance reduce_envyfree(const EnvyInstance& envy);

struct EnvyResult {
  std::optional<Matching> matching;  // engaged iff an envy-free full assignment exists
  Instance reduced;
  PreprocessResult pre;
};

EnvyResult solve_envyfree_full(const EnvyInstance& envy);
std::optional<Matching> solve_envyfree(const EnvyInstance& envy);

}  // namespace ssmc
