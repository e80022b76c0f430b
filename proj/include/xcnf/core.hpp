#pragma once

// Clause-set algebra: literals, clauses, clause-sets, partial assignments.
//
// Conventions used throughout the toolkit:
//  - variables are positive integers, literals are nonzero integers
//    (negative = complemented variable);
//  - literals inside a clause are sorted by (variable, positive first),
//    clauses inside a clause-set are sorted lexicographically over that key;
//  - the empty clause-set (top) and the empty clause (bottom) are ordinary
//    values, never error states.
// All values are immutable after construction and safe to share.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xcnf {

using Var = int;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when an enumeration/size cap would be exceeded (CLI exit code 3).
struct CapError : Error {
  explicit CapError(const std::string& msg) : Error(msg) {}
};

// A literal; value > 0 is the variable itself, value < 0 its complement.
class Lit {
 public:
  Lit() = delete;
  explicit Lit(int value) : v_(value) {
    if (v_ == 0) throw Error("literal value must be nonzero");
  }

  int value() const { return v_; }
  Var var() const { return v_ > 0 ? v_ : -v_; }
  bool positive() const { return v_ > 0; }
  Lit complement() const { return Lit(-v_); }

  // Canonical key: variable major, positive before negative.
  long key() const { return 2L * var() + (positive() ? 0 : 1); }

  friend bool operator==(Lit a, Lit b) { return a.v_ == b.v_; }
  friend bool operator!=(Lit a, Lit b) { return a.v_ != b.v_; }
  friend bool operator<(Lit a, Lit b) { return a.key() < b.key(); }

 private:
  int v_;
};

// A complement-free set of literals, kept in canonical order.
class Clause {
 public:
  Clause() = default;  // the empty clause (bottom)
  explicit Clause(std::vector<Lit> lits);
  Clause(std::initializer_list<int> lits);

  static std::optional<Clause> try_make(std::vector<Lit> lits);  // nullopt on clash

  const std::vector<Lit>& lits() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  bool contains(Lit x) const;
  bool subset_of(const Clause& other) const;
  std::vector<Var> vars() const;

  bool is_horn() const;  // at most one positive literal

  friend bool operator==(const Clause& a, const Clause& b) { return a.lits_ == b.lits_; }
  friend bool operator!=(const Clause& a, const Clause& b) { return !(a == b); }
  friend bool operator<(const Clause& a, const Clause& b);

  std::string str() const;

 private:
  std::vector<Lit> lits_;
};

// A finite set of clauses, kept sorted and duplicate-free.
class ClauseSet {
 public:
  ClauseSet() = default;  // top
  explicit ClauseSet(std::vector<Clause> clauses);
  ClauseSet(std::initializer_list<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }          // F == top
  bool has_empty_clause() const;                           // bottom in F
  bool contains(const Clause& c) const;

  std::size_t c() const { return clauses_.size(); }        // number of clauses
  std::size_t n() const;                                   // number of variables
  std::size_t ell() const;                                 // literal occurrences
  std::vector<Var> vars() const;                           // sorted
  std::vector<Lit> occurring_lits() const;                 // sorted, the union of F
  bool is_horn() const;

  friend bool operator==(const ClauseSet& a, const ClauseSet& b) {
    return a.clauses_ == b.clauses_;
  }
  friend bool operator!=(const ClauseSet& a, const ClauseSet& b) { return !(a == b); }
  friend bool operator<(const ClauseSet& a, const ClauseSet& b) {
    return a.clauses_ < b.clauses_;
  }

  std::string str() const;

 private:
  std::vector<Clause> clauses_;
};

// Finite map variable -> bit.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::vector<std::pair<Var, bool>> entries);

  static PartialAssignment falsifying(const Clause& c);  // phi_C: every literal of C -> 0

  const std::vector<std::pair<Var, bool>>& entries() const { return map_; }
  std::size_t n() const { return map_.size(); }
  bool defines(Var v) const;
  std::optional<bool> value(Var v) const;
  std::optional<bool> value(Lit x) const;  // complement-aware
  std::vector<Var> vars() const;

  PartialAssignment with(Lit x, bool val) const;  // extend/overwrite one binding

  friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) {
    return a.map_ == b.map_;
  }

  std::string str() const;

 private:
  std::vector<std::pair<Var, bool>> map_;  // sorted by variable
};

// phi * F: remove satisfied clauses, delete falsified literals from the rest.
ClauseSet apply(const PartialAssignment& phi, const ClauseSet& f);

// purec(F): occurring literals whose complement never occurs.
Clause pure_clause(const ClauseSet& f);

// rsub(F): the inclusion-minimal clauses of F.
ClauseSet subsumption_eliminate(const ClauseSet& f);

// Left-biased union: agrees with phi on var(phi), else with psi.
PartialAssignment compose(const PartialAssignment& phi, const PartialAssignment& psi);

}  // namespace xcnf
