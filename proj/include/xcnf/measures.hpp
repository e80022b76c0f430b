#pragma once

// Hardness hd^V, p-hardness phd^V, asymmetric width whd^V, symmetric width
// wid^V, class membership UC_k/PC_k/WC_k, and prime implicates.
//
// All measures quantify over partial assignments with variables in the scope
// V.  Two exact strategies are used: enumeration of PASS(V) (desk scale,
// |V| <= enum_cap), and, for clause-sets of the shape X0(G) for an XOR
// system G, an affine-state sweep that stays exact at sizes where the
// enumeration is hopeless.  Both agree wherever both run; the tests check
// that exhaustively.

#include <string>

#include "xcnf/core.hpp"
#include "xcnf/xortrans.hpp"

namespace xcnf {

enum class MeasureKind { Hd, Phd, Whd, Wid };

struct MeasureReport {
  MeasureKind kind = MeasureKind::Hd;
  std::vector<Var> scope;
  unsigned value = 0;
  PartialAssignment witness;  // a maximizing assignment where applicable

  // "kind scope_size value" plus optional witness line "v 1 -2 0".
  std::string str(bool with_witness = false) const;
};

struct MeasureOptions {
  std::size_t enum_cap = 12;        // max |V| for the PASS(V) enumeration
  bool allow_fast_path = true;      // use the affine engine when F == X0(G)
  std::size_t fast_cutoff = 10;     // |V| <= cutoff stays on the generic path
  long k_cap = -1;                  // <0: n(F)+1
};

MeasureReport hardness(const ClauseSet& f, const std::vector<Var>& scope,
                       const MeasureOptions& opts = {});
MeasureReport p_hardness(const ClauseSet& f, const std::vector<Var>& scope,
                         const MeasureOptions& opts = {});
MeasureReport asymmetric_width(const ClauseSet& f, const std::vector<Var>& scope,
                               const MeasureOptions& opts = {});
MeasureReport symmetric_width(const ClauseSet& f, const std::vector<Var>& scope,
                              const MeasureOptions& opts = {});

// Threshold checks, cheaper than full values for small k.  On failure the
// optional out-parameter receives a violating assignment.
bool hd_at_most(const ClauseSet& f, const std::vector<Var>& scope, unsigned k,
                const MeasureOptions& opts = {}, PartialAssignment* counterexample = nullptr);
bool phd_at_most(const ClauseSet& f, const std::vector<Var>& scope, unsigned k,
                 const MeasureOptions& opts = {}, PartialAssignment* counterexample = nullptr);

struct ClassMembership {
  bool in_uc = false;   // hd(F) <= k
  bool in_pc = false;   // phd(F) <= k
  bool in_wc = false;   // whd(F) <= k
};
ClassMembership class_membership(const ClauseSet& f, unsigned k,
                                 const MeasureOptions& opts = {});

// primec_0(F) via minimal premise sets: collect purec(G) over the nonempty
// G subseteq F entailed by F, then eliminate subsumed clauses.
ClauseSet prime_implicates(const ClauseSet& f, std::size_t clause_cap = 18);

// F entails C (via sat_decide on F plus the complemented unit literals).
bool entails(const ClauseSet& f, const Clause& c);

// G is a minimal premise set: G entails purec(G), no proper subset does.
bool is_minimal_premise_set(const ClauseSet& g);

}  // namespace xcnf
