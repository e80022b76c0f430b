#pragma once

// Resolution trees, dag-shaped proofs, proof checking, Horton-Strahler
// numbers, and k-resolution saturation (the refutation engine behind the
// width measures).
//
// Proof file format, one line per clause:
//   id: lit ... 0                      axiom
//   id: lit ... 0 <- id1 id2 pivot     resolvent of id1 (containing `pivot`)
//                                      and id2 (containing its complement)

#include <memory>
#include <optional>
#include <string>

#include "xcnf/core.hpp"

namespace xcnf {

// Resolvent of two clauses clashing in exactly one literal.
// Throws Error naming the clash count otherwise.
Clause resolve(const Clause& c, const Clause& d);

struct ResolutionTree;
using TreePtr = std::shared_ptr<const ResolutionTree>;

struct ResolutionTree {
  Clause clause;
  TreePtr left, right;          // null for axioms
  std::optional<Lit> pivot;     // the literal of `left` resolved away
  bool is_axiom() const { return !left; }
};

TreePtr make_axiom(Clause c);
TreePtr make_step(TreePtr left, TreePtr right);  // derives the resolvent

struct CheckReport {
  bool ok = false;
  std::string diagnostic;  // node path / line id on failure
};

// 1 iff every leaf is in F, every step is a valid resolution, root == target.
CheckReport check_proof(const TreePtr& t, const ClauseSet& f, const Clause& target);

// Horton-Strahler number: leaves 0; max of children if distinct, else +1.
unsigned horton_strahler(const TreePtr& t);

// Dag-shaped proof with shared subtrees, serialized as numbered lines.
struct ProofLine {
  int id = 0;
  Clause clause;
  bool axiom = true;
  int parent1 = 0, parent2 = 0;
  int pivot = 0;  // literal value occurring in parent1
};

struct Proof {
  std::vector<ProofLine> lines;
  std::size_t size() const { return lines.size(); }
  std::size_t max_clause_length() const;
};

CheckReport check_proof(const Proof& p, const ClauseSet& f, const Clause& target);
std::string emit_proof(const Proof& p);
Proof parse_proof(const std::string& text);

// Unfolds the dag below `id` into a tree (exponential for shared proofs).
TreePtr unfold(const Proof& p, int id);

// Closure of F under resolution steps with min(|C|,|D|) <= k, subsumption
// interleaved; bot is in the result iff k-resolution refutes F.
ClauseSet k_resolution_saturate(const ClauseSet& f, unsigned k,
                                std::size_t clause_cap = 2'000'000);

// Refutation-oriented: stops as soon as bot is derived.
bool k_resolution_refutes(const ClauseSet& f, unsigned k,
                          std::size_t clause_cap = 2'000'000);

// Symmetric variant: every clause of the proof (axioms included) has length
// at most k, so the closure lives in the bounded-width clause space.
bool symmetric_width_refutes(const ClauseSet& f, unsigned k,
                             std::size_t clause_cap = 2'000'000);

// Least k such that k-resolution (resp. symmetric width k) refutes F;
// F must be unsatisfiable.
unsigned min_asymmetric_refutation_width(const ClauseSet& f);
unsigned min_symmetric_refutation_width(const ClauseSet& f);

// Unrestricted resolution closure followed by subsumption elimination;
// equals the set of prime implicates (the cross-oracle for module measures).
ClauseSet resolution_closure(const ClauseSet& f, std::size_t clause_cap = 2'000'000);

// The explicit refutation of T_n (n >= 3): 18n-29 clauses, length <= 3,
// shared-subtree dag over the generator's variable layout.
Proof build_tn_refutation(int n);

}  // namespace xcnf
