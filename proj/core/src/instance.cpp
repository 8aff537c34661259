#include "ssmc/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "parse_util.hpp"

namespace ssmc {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::syntax: return "E_SYNTAX";
    case errc::unknown_id: return "E_UNKNOWN_ID";
    case errc::dup_id: return "E_DUP_ID";
    case errc::asymmetric: return "E_ASYMMETRIC";
    case errc::closed_not_hospital: return "E_CLOSED_NOT_HOSPITAL";
    case errc::dup_pref_entry: return "E_DUP_PREF_ENTRY";
    case errc::not_incident: return "E_NOT_INCIDENT";
    case errc::not_flat: return "E_NOT_FLAT";
    case errc::empty_flat_hospital: return "E_EMPTY_FH";
    case errc::edge_in_matching: return "E_EDGE_IN_MATCHING";
    case errc::edge_not_in_e: return "E_EDGE_NOT_IN_E";
    case errc::not_matching: return "E_NOT_MATCHING";
    case errc::star_violated: return "E_STAR_VIOLATED";
    case errc::degree_bound: return "E_DEGREE";
    case errc::indegree: return "E_INDEGREE";
    case errc::budget: return "E_BUDGET";
    case errc::bad_n: return "E_BAD_N";
    case errc::occurrence: return "E_OCCURRENCE";
    case errc::clause_size: return "E_CLAUSE_SIZE";
    case errc::unsat_assignment: return "E_UNSAT_ASSIGNMENT";
    case errc::not_canonical: return "E_NOT_CANONICAL";
    case errc::internal: return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

void fail(errc code, const std::string& what) { throw Error(code, what); }

bool valid_id(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '.' || c == '-';
    if (!ok) return false;
  }
  return true;
}

namespace detail {

std::vector<std::string> sorted_unique_ids(std::vector<std::string> ids, const char* what) {
  for (const auto& id : ids)
    require(valid_id(id), errc::syntax, std::string(what) + " id '" + id + "' is not a valid id");
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  require(dup == ids.end(), errc::dup_id,
          std::string("duplicate ") + what + " id '" + (dup == ids.end() ? "" : *dup) + "'");
  return ids;
}

std::optional<int> index_of(const std::vector<std::string>& sorted, std::string_view name) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), name);
  if (it == sorted.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace detail

using detail::index_of;
using detail::sorted_unique_ids;

std::optional<int> Instance::find_doctor(std::string_view name) const {
  return index_of(doctors_, name);
}

std::optional<int> Instance::find_hospital(std::string_view name) const {
  return index_of(hospitals_, name);
}

std::optional<int> Instance::find_edge(int d, int h) const {
  const auto& row = doctor_edges_[d];
  auto it = std::lower_bound(row.begin(), row.end(), h,
                             [&](int eid, int hh) { return edges_[eid].hospital < hh; });
  if (it == row.end() || edges_[*it].hospital != h) return std::nullopt;
  return *it;
}

Instance Instance::make(InstanceData data) {
  Instance inst;
  inst.doctors_ = sorted_unique_ids(std::move(data.doctors), "doctor");
  inst.hospitals_ = sorted_unique_ids(std::move(data.hospitals), "hospital");
  for (const auto& d : inst.doctors_)
    require(!index_of(inst.hospitals_, d), errc::dup_id,
            "id '" + d + "' is used as both a doctor and a hospital");

  const int nd = inst.num_doctors();
  const int nh = inst.num_hospitals();

  inst.closed_mask_.assign(nh, false);
  for (const auto& name : data.closed) {
    auto h = index_of(inst.hospitals_, name);
    if (!h) {
      require(!index_of(inst.doctors_, name).has_value(), errc::closed_not_hospital,
              "closed id '" + name + "' is a doctor, not a hospital");
      fail(errc::unknown_id, "closed id '" + name + "' is not declared");
    }
    inst.closed_mask_[*h] = true;
  }
  for (int h = 0; h < nh; ++h)
    if (inst.closed_mask_[h]) inst.closed_.push_back(h);

  // Resolve preference lines: exactly one per vertex, partners on the
  // opposite side, no partner twice.
  inst.doctor_prefs_.assign(nd, {});
  inst.hospital_prefs_.assign(nh, {});
  std::vector<bool> seen_d(nd, false), seen_h(nh, false);
  for (auto& [name, raw_groups] : data.prefs) {
    Side side;
    int v;
    if (auto d = index_of(inst.doctors_, name)) {
      side = Side::doctor;
      v = *d;
      require(!seen_d[v], errc::syntax, "duplicate pref line for '" + name + "'");
      seen_d[v] = true;
    } else if (auto h = index_of(inst.hospitals_, name)) {
      side = Side::hospital;
      v = *h;
      require(!seen_h[v], errc::syntax, "duplicate pref line for '" + name + "'");
      seen_h[v] = true;
    } else {
      fail(errc::unknown_id, "pref line for undeclared vertex '" + name + "'");
    }
    const auto& partner_pool = side == Side::doctor ? inst.hospitals_ : inst.doctors_;
    PrefOrder order;
    std::set<int> used;
    for (auto& group : raw_groups) {
      std::vector<int> members;
      for (auto& partner : group) {
        auto p = index_of(partner_pool, partner);
        require(p.has_value(), errc::unknown_id,
                "pref of '" + name + "' lists '" + partner + "', which is not a " +
                    (side == Side::doctor ? "hospital" : "doctor"));
        require(used.insert(*p).second, errc::dup_pref_entry,
                "pref of '" + name + "' lists '" + partner + "' twice");
        members.push_back(*p);
      }
      std::sort(members.begin(), members.end());
      order.groups.push_back(std::move(members));
    }
    (side == Side::doctor ? inst.doctor_prefs_[v] : inst.hospital_prefs_[v]) = std::move(order);
  }
  for (int d = 0; d < nd; ++d)
    require(seen_d[d], errc::syntax, "missing pref line for doctor '" + inst.doctors_[d] + "'");
  for (int h = 0; h < nh; ++h)
    require(seen_h[h], errc::syntax, "missing pref line for hospital '" + inst.hospitals_[h] + "'");

  // Derive the edge set from doctor preferences and require the hospital
  // side to list exactly the same pairs.
  std::set<std::pair<int, int>> from_doctors, from_hospitals;
  for (int d = 0; d < nd; ++d)
    for (const auto& g : inst.doctor_prefs_[d].groups)
      for (int h : g) from_doctors.insert({d, h});
  for (int h = 0; h < nh; ++h)
    for (const auto& g : inst.hospital_prefs_[h].groups)
      for (int d : g) from_hospitals.insert({d, h});
  for (const auto& [d, h] : from_doctors)
    require(from_hospitals.count({d, h}) != 0, errc::asymmetric,
            "'" + inst.doctors_[d] + "' lists '" + inst.hospitals_[h] +
                "' but not the other way around");
  for (const auto& [d, h] : from_hospitals)
    require(from_doctors.count({d, h}) != 0, errc::asymmetric,
            "'" + inst.hospitals_[h] + "' lists '" + inst.doctors_[d] +
                "' but not the other way around");

  for (const auto& [d, h] : from_doctors) inst.edges_.push_back(Edge{d, h});

  inst.doctor_edges_.assign(nd, {});
  inst.hospital_edges_.assign(nh, {});
  for (int eid = 0; eid < inst.num_edges(); ++eid) {
    inst.doctor_edges_[inst.edges_[eid].doctor].push_back(eid);
    inst.hospital_edges_[inst.edges_[eid].hospital].push_back(eid);
  }

  inst.rank_d_.assign(inst.num_edges(), 0);
  inst.rank_h_.assign(inst.num_edges(), 0);
  for (int d = 0; d < nd; ++d) {
    int rank = 0;
    for (const auto& g : inst.doctor_prefs_[d].groups) {
      ++rank;
      for (int h : g) inst.rank_d_[*inst.find_edge(d, h)] = rank;
    }
  }
  for (int h = 0; h < nh; ++h) {
    int rank = 0;
    for (const auto& g : inst.hospital_prefs_[h].groups) {
      ++rank;
      for (int d : g) inst.rank_h_[*inst.find_edge(d, h)] = rank;
    }
  }
  return inst;
}

namespace detail {

std::vector<std::vector<std::string>> parse_groups(const std::string& text,
                                                   const std::string& where) {
  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
    } else if (c == '>' || c == '=') {
      if (!cur.empty()) tokens.push_back(std::exchange(cur, {}));
      tokens.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);

  bool expect_id = true;
  for (const auto& tok : tokens) {
    if (tok == ">" || tok == "=") {
      require(!groups.empty() && !expect_id, errc::syntax,
              "misplaced '" + tok + "' in pref of '" + where + "'");
      if (tok == ">") groups.emplace_back();
      expect_id = true;
    } else {
      require(valid_id(tok), errc::syntax, "bad token '" + tok + "' in pref of '" + where + "'");
      require(expect_id, errc::syntax,
              "missing separator before '" + tok + "' in pref of '" + where + "'");
      if (groups.empty()) groups.emplace_back();
      groups.back().push_back(tok);
      expect_id = false;
    }
  }
  require(tokens.empty() || !expect_id, errc::syntax,
          "dangling separator in pref of '" + where + "'");
  return groups;
}

std::vector<std::string> split_ids(const std::string& text, const char* what) {
  std::vector<std::string> ids;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    require(valid_id(tok), errc::syntax, std::string("bad ") + what + " id '" + tok + "'");
    ids.push_back(tok);
  }
  return ids;
}

std::string strip(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

using detail::parse_groups;
using detail::split_ids;
using detail::strip;

Instance Instance::parse(const std::string& text) {
  InstanceData data;
  bool saw_doctors = false, saw_hospitals = false, saw_closed = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    auto at = [&](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
    if (line.rfind("doctors:", 0) == 0) {
      require(!saw_doctors, errc::syntax, at("duplicate doctors section"));
      saw_doctors = true;
      data.doctors = split_ids(line.substr(8), "doctor");
    } else if (line.rfind("hospitals:", 0) == 0) {
      require(!saw_hospitals, errc::syntax, at("duplicate hospitals section"));
      saw_hospitals = true;
      data.hospitals = split_ids(line.substr(10), "hospital");
    } else if (line.rfind("closed:", 0) == 0) {
      require(!saw_closed, errc::syntax, at("duplicate closed section"));
      saw_closed = true;
      data.closed = split_ids(line.substr(7), "closed");
    } else if (line.rfind("pref ", 0) == 0) {
      auto colon = line.find(':');
      require(colon != std::string::npos, errc::syntax, at("pref line without ':'"));
      std::string name = strip(line.substr(5, colon - 5));
      require(valid_id(name), errc::syntax, at("bad vertex id in pref line"));
      data.prefs.emplace_back(name, parse_groups(line.substr(colon + 1), name));
    } else {
      fail(errc::syntax, at("unrecognized line '" + line + "'"));
    }
  }
  require(saw_doctors, errc::syntax, "missing doctors section");
  require(saw_hospitals, errc::syntax, "missing hospitals section");
  return make(std::move(data));
}

namespace {

void write_ids(std::ostringstream& out, const char* header, const std::vector<std::string>& ids) {
  out << header;
  for (const auto& id : ids) out << ' ' << id;
  out << '\n';
}

}  // namespace

std::string Instance::serialize() const {
  std::ostringstream out;
  write_ids(out, "doctors:", doctors_);
  write_ids(out, "hospitals:", hospitals_);
  if (!closed_.empty()) {
    out << "closed:";
    for (int h : closed_) out << ' ' << hospitals_[h];
    out << '\n';
  }
  auto write_pref = [&](const std::string& name, const PrefOrder& pref,
                        const std::vector<std::string>& partners) {
    out << "pref " << name << ':';
    for (size_t g = 0; g < pref.groups.size(); ++g) {
      if (g > 0) out << " >";
      for (size_t i = 0; i < pref.groups[g].size(); ++i) {
        if (i > 0) out << " =";
        out << ' ' << partners[pref.groups[g][i]];
      }
    }
    out << '\n';
  };
  for (int d = 0; d < num_doctors(); ++d) write_pref(doctors_[d], doctor_prefs_[d], hospitals_);
  for (int h = 0; h < num_hospitals(); ++h) write_pref(hospitals_[h], hospital_prefs_[h], doctors_);
  return out.str();
}

Instance Instance::with_closed(std::vector<std::string> closed) const {
  InstanceData data;
  data.doctors = doctors_;
  data.hospitals = hospitals_;
  data.closed = std::move(closed);
  auto add_prefs = [&](const std::vector<std::string>& names, const std::vector<PrefOrder>& prefs,
                       const std::vector<std::string>& partners) {
    for (size_t v = 0; v < names.size(); ++v) {
      std::vector<std::vector<std::string>> groups;
      for (const auto& g : prefs[v].groups) {
        std::vector<std::string> members;
        for (int p : g) members.push_back(partners[p]);
        groups.push_back(std::move(members));
      }
      data.prefs.emplace_back(names[v], std::move(groups));
    }
  };
  add_prefs(doctors_, doctor_prefs_, hospitals_);
  add_prefs(hospitals_, hospital_prefs_, doctors_);
  return make(std::move(data));
}

}  // namespace ssmc
