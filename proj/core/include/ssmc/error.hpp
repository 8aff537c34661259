#pragma once

#include <stdexcept>
#include <string>

namespace ssmc {

// Error categories surfaced by the library. Input-shaped problems carry
// stable codes so callers (in particular the CLI) can map them to exit codes.
enum class errc {
  syntax,
  unknown_id,
  dup_id,
  asymmetric,
  closed_not_hospital,
  dup_pref_entry,
  not_incident,
  not_flat,
  empty_flat_hospital,
  edge_in_matching,
  edge_not_in_e,
  not_matching,
  star_violated,
  degree_bound,
  indegree,
  budget,
  bad_n,
  occurrence,
  clause_size,
  unsat_assignment,
  not_canonical,
  internal,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// A violated internal invariant: a bug in this library, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(errc::internal, what) {}
};

[[noreturn]] void fail(errc code, const std::string& what);

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Invariant check that throws InternalError; never disabled by build type.
inline void check_invariant(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace ssmc
